#pragma once

#include <iosfwd>
#include <string>

#include "btl/core.hpp"
#include "btl/fourier.hpp"
#include "btl/instances.hpp"
#include "btl/monotone.hpp"

// File formats.
//
// Truth tables: a header line `n=<n> range=<pm_one|extended_int>` followed by
// 2^n whitespace-separated integers in point-index order.  pm_one tables may
// instead be hex-packed (1 bit per point, +1 -> 1); the header then carries
// `packed=hex` and the reader auto-detects it.
//
// Spectra: CSV rows `mask,setsize,coeff_numerator`, implicit denominator 2^n.
//
// Instances: JSON {ell, m, k, promise, x_blocks, y_blocks} with bitmask ints.

namespace btl {

void write_truth_table(std::ostream& out, const BFunc& f, bool hex_packed = false);
BFunc read_truth_table(std::istream& in);

void write_truth_table_file(const std::string& path, const BFunc& f, bool hex_packed = false);
BFunc read_truth_table_file(const std::string& path);

void write_spectrum_csv(std::ostream& out, const Spectrum& s, bool include_zeros = false);

std::string instance_to_json(const DisjInstance& inst);
DisjInstance instance_from_json(const std::string& text);

std::string violation_report_to_json(const ViolationReport& r, const DistanceBounds* bounds);

}  // namespace btl
