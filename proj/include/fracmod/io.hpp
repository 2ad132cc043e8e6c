// SPDX-License-Identifier: Apache-2.0
//
// Text formats: CSV with 17 significant digits and JSON with sorted keys, plus the
// function-spec mini-grammar used on the command line.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fracmod/kernel.hpp"
#include "fracmod/moduli.hpp"
#include "fracmod/signal.hpp"
#include "fracmod/zeros.hpp"

namespace fracmod {

/// Shortest round-trip-safe rendering ("%.17g"); "inf", "-inf", "nan" for non-finite values.
std::string format_double(double v);

/// Parses a double, accepting "inf"/"infinity" (any case). Throws InvalidArgument.
double parse_double(const std::string& s);

/// Parses p in (0, inf].
double parse_p(const std::string& s);

/// exp:<n> | random:<degree>:<seed> | sawtooth:<degree> | abssin:<degree> | const[:<c>]
CorpusMember parse_function_spec(const std::string& spec);

inline const char* kEquivHeader = "fid,beta,alpha,h,p,omega,w,omega_tilde,omega_star,r_w,r_tilde,r_star";

void write_equiv_csv(std::ostream& os, const EquivReport& report);
std::string equiv_json(const EquivReport& report);

void write_curve_csv(std::ostream& os, const std::vector<KernelPoint>& curve);

/// [{"beta", "bracket", "branch", "residual", "t"}, ...] with sorted keys.
std::string zeros_json(const std::vector<ZeroRecord>& records);
std::vector<ZeroRecord> parse_zeros_json(const std::string& text);

/// Splits one CSV line (no quoting is ever emitted, but quoted fields are accepted).
std::vector<std::string> split_csv_line(const std::string& line);

/// Writes text to path; throws IoFailure.
void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

}  // namespace fracmod
