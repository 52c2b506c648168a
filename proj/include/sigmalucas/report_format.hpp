#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "sigmalucas/lucas.hpp"
#include "sigmalucas/pell.hpp"
#include "sigmalucas/sigma3.hpp"
#include "sigmalucas/solver.hpp"

// Serialization of command results. JSON keeps a fixed key order and writes
// every potentially large integer as a decimal string; TSV writes one record
// per line with the record kind in the first column.
namespace sigmalucas::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, tsv };

Json to_json(const solver::SolutionReport& report);
void write_tsv(std::ostream& out, const solver::SolutionReport& report);

Json to_json(const pell::PellShape& shape, int rhs, std::span<const pell::PellSolution> solutions);
void write_tsv(std::ostream& out, std::span<const pell::PellSolution> solutions);

Json to_json(std::span<const sigma3::Sigma3Hit> hits, std::uint64_t bound, bool restrict_q);
Json to_json(std::span<const sigma3::ConjectureHit> hits, std::uint64_t bound);

std::string_view form_name(pell::PellForm form);

}  // namespace sigmalucas::cli
