#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2ps/weyl.hpp"

namespace g2ps {

// The five inertial cases with nontrivial stabilizer, plus the generic one.
enum class Case { Iwahori, GL2ChiOne, GL2ChiChi, SL3, SO4, TrivialWs };

std::string case_name(Case c); // "iwahori", "gl2-chi1", ...
std::optional<Case> case_from_name(std::string_view name);
std::vector<Case> all_cases(); // the five nontrivial ones, in presentation order

// Restriction-to-units data of a character pair, as exponents mod N.
using RamPair = std::array<long long, 2>;

// Canonical representative ramification pair for each case (N = 12).
RamPair rep_pair(Case c);

// Subgroup of W fixing the pair under the torus action mod N.
std::vector<IntMat> stabilizer_subgroup(const WeylGroup& W, const RamPair& c, long long N);

// W-orbit of the pair in (Z/N)^2.
std::vector<RamPair> ram_orbit(const WeylGroup& W, const RamPair& c, long long N);

// Subgroup generated by the reflections whose pairing vector annihilates the
// pair mod N; must always coincide with stabilizer_subgroup.
std::vector<IntMat> reflection_stabilizer(const WeylGroup& W, const RamPair& c, long long N);

// Case classification, normalizing by the W-action first.
Case classify_case(const WeylGroup& W, const RamPair& c, long long N);

// The six conditions for a trivial stabilizer: no root pairing kills the pair.
bool ws_trivial(const WeylGroup& W, const RamPair& c, long long N);

enum class OrbitPattern { ChiChi, ChiOne };

// Size of the W-orbit of (m,m) resp. (m,0) for a character of the given
// order, computed by enumeration in (Z/N)^2.
long long orbit_size(const WeylGroup& W, OrbitPattern pattern, long long order_of_chi,
                     long long N);

} // namespace g2ps
