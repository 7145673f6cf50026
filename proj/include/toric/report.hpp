#pragma once

// JSON, Markdown and CSV renderings. Key order is fixed so output is
// byte-for-byte reproducible.

#include "toric/cohomology.hpp"
#include "toric/cones.hpp"
#include "toric/fan.hpp"
#include "toric/frobenius.hpp"
#include "toric/tilting.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace toric {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const Integer& z);
Json to_json(std::span<const Integer> v);
Json to_json(const DivisorClass& c);
Json to_json(const TorusDivisor& d);
Json to_json(const ValidationReport& r);
Json to_json(const NefVerdict& v);
Json to_json(const CohomologyVector& v, bool with_patterns);
Json to_json(const FrobSet& f);
Json to_json(const TiltingCandidate& c);
Json to_json(const OrlovReport& r);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string to_markdown(const Table& t);
std::string to_csv(const Table& t);

std::string class_label(const DivisorClass& c);
Table orlov_table(const std::vector<OrlovReport>& reports);

}  // namespace toric
