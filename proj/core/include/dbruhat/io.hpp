#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "dbruhat/adlv.hpp"
#include "dbruhat/admissible.hpp"
#include "dbruhat/quantum_bruhat.hpp"

namespace dbruhat {

using Json = nlohmann::json;

// Text forms. Malformed input raises ParseError; well-formed input that
// names something outside the root system raises DomainError.
WeylElement parse_weyl(const RootSystem& R, std::string_view text);  // "s1 s2 s1", "e"
std::string format_weyl(const WeylElement& w);

Coweight parse_coweight(const RootSystem& R, std::string_view text);  // "10,10"
std::string format_coweight(const Coweight& mu);

RootIndex parse_root(const RootSystem& R, std::string_view text);  // "1,1", positive or negative
std::string format_root(const RootSystem& R, RootIndex a);

AffineElement parse_affine(const RootSystem& R, std::string_view text);  // "s1 s2 s1;1,1"
std::string format_affine(const AffineElement& x);

// Either a reduced word of w₀ or the roots in order separated by ';'.
ReflectionOrder parse_order(const RootSystem& R, std::string_view text);
std::string format_order(const ReflectionOrder& order);       // word form
std::string format_order_roots(const ReflectionOrder& order);  // root form

// "2rho" for the box 0 ≤ ω ≤ 2ρ∨, or ';'-separated coweights.
WeightWindow parse_window(const RootSystem& R, std::string_view text);

std::vector<int> parse_index_set(const RootSystem& R, std::string_view text);  // "1,2" 1-based, "" empty

Json to_json(const RootSystem& R);
Json to_json(const WeightMultiset& m);
Json to_json(const LabelledPath& p);
Json to_json(const ReflectionOrder& order);
Json to_json(const AdmissibleType& tau);
Json to_json(const IntersectionCensus& c);
Json to_json(const ADLVReport& r);
Json to_json(const QuantumBruhatGraph& Q);
Json to_json(const QbgCompareReport& r);
Json to_json(const HyperspecialReport& r);

// Canonical text: sorted keys, no whitespace, trailing newline.
std::string emit(const Json& j);

}  // namespace dbruhat
