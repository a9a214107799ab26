#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "qdel/codec.hpp"
#include "qdel/combinatorics.hpp"
#include "qdel/search.hpp"

namespace qdel {

// Code files are JSON: {"n": 4, "A": ["0000", ...], "B": ["0011", ...]}
// with bit strings as ASCII '0'/'1' text.
CodePair code_pair_from_json(const nlohmann::json& j);
nlohmann::ordered_json code_pair_to_json(const CodePair& pair);
CodePair load_code_file(const std::filesystem::path& path);
void save_code_file(const std::filesystem::path& path, const CodePair& pair);

/// Byte-stable text rendering of a delta table: one row per position,
/// columns b=0 and b=1, cells in lexicographic order.
std::string render_delta_table(const CodePair& pair, const DeltaTable& table);

/// FNV-1a hash of the inputs, printed in reports for diffability.
std::string digest_hex(const std::string& data);

struct RoundtripCase {
    std::size_t position = 0;
    cplx alpha{};
    cplx beta{};
    double fidelity = 0.0;
    std::size_t outcome = 0; // 1-based in all rendered output
    bool pass = false;
};

struct RunReport {
    std::string command;
    std::string digest;
    nlohmann::ordered_json inputs;
    std::vector<RoundtripCase> cases;
    bool pass = false;
};

std::string report_text(const RunReport& report);
nlohmann::ordered_json report_json(const RunReport& report);

struct DemoRow {
    std::string label;
    std::uint64_t count0 = 0;
    std::uint64_t count1 = 0;
    double pct0 = 0.0;
    double pct1 = 0.0;
};

/// Monte-Carlo run of the built-in 4-qubit code under D_1 for the inputs
/// |0>, |1>, |+>: each shot encodes, deletes, decodes, then measures the
/// recovered qubit in the computational basis.
std::vector<DemoRow> demo_table3(std::uint64_t shots, std::uint64_t seed);

std::string render_demo_table(const std::vector<DemoRow>& rows);

} // namespace qdel
