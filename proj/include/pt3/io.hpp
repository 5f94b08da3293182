// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "pt3/sums.hpp"
#include "pt3/wpt.hpp"

namespace pt3 {

/// {"terms":[{"a":int,"b":num,"m":num}, ...]}; "m" defaults to 0.
/// Malformed documents raise DomainError; SumSpec invariants are enforced by
/// its constructor.
SumSpec parse_sum_spec(const std::string& text, const SumOptions& options = {});
SumSpec load_sum_spec(const std::string& path, const SumOptions& options = {});
std::string sum_spec_to_json(const SumSpec& spec);

/// {"model":{"A","B","Ps"}, "branches":[{"at","ar","fc","d","p",
/// "fading":{"a","b"}}]}, all SI units.
MisoScenario parse_scenario(const std::string& text);
MisoScenario load_scenario(const std::string& path);
std::string scenario_to_json(const MisoScenario& scenario);

/// FNV-1a over the canonical JSON form: equal scenarios hash equal
/// regardless of key order or number formatting in the source file.
std::uint64_t scenario_hash(const MisoScenario& scenario);
std::string hash_hex(std::uint64_t hash);

}  // namespace pt3
