// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mwlat/bounds.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

namespace mwlat::io {

using json = nlohmann::ordered_json;

/// "num/den" ("num" when integral); parse accepts both forms.
std::string rational_to_string(const Rational& x);
Rational rational_from_string(const std::string& text);

/// Debug dump of a field: {p, s, modulus_coeffs}.
json field_to_json(const FieldCtx& ctx);

/// Point-set export: field header plus one {x_num, x_den, y_num, y_den}
/// object per point, coefficients as integer-encoded field elements
/// (base-p digit encoding, emitted as decimal strings).
json points_to_json(const FieldCtx& ctx, const std::vector<CurvePoint>& points);
std::vector<CurvePoint> points_from_json(const FieldCtx& ctx, const json& doc);

/// Gram export: {n_gen, scale, entries} with the scaled integer upper
/// triangle in row-major order. Byte-deterministic.
json gram_to_json(const GramMatrix& g);
GramMatrix gram_from_json(const json& doc);

// ---- line-oriented input files (magic header "MWLAT1") -------------------

/// Model file: "MWLAT1 model", then "p s", then a1 a2 a3 a4 a6 coefficient
/// vectors, one per line, e.g. "[0,-1,0,0,0,1]". Coefficients are integer
/// encodings; negative values are prime-subfield shorthand (reduced mod p).
struct ModelFile {
    unsigned long p = 0, s = 0;
    std::array<std::vector<long long>, 5> coeffs; // a1, a2, a3, a4, a6
};
ModelFile parse_model_file(std::istream& in);
WeierstrassCurve curve_from_model(const FieldCtx& ctx, const ModelFile& model);

/// Points file: "MWLAT1 points", then "p s", then one point per line as
/// four coefficient vectors "x_num x_den y_num y_den", or the word
/// "identity". Blank lines and '#' comments are skipped.
struct PointsFile {
    unsigned long p = 0, s = 0;
    std::vector<std::optional<std::array<std::vector<long long>, 4>>> points;
};
PointsFile parse_points_file(std::istream& in);
std::vector<CurvePoint> points_from_parsed(const FieldCtx& ctx, const PointsFile& file);
void write_points_file(std::ostream& out, const FieldCtx& ctx, const std::vector<CurvePoint>& points);

// ---- table emitters -------------------------------------------------------

std::string table1_csv_header();
std::string table1_csv_row(const Table1Row& row);
json table1_row_to_json(const Table1Row& row);

std::string table2_csv_header();
std::string table2_csv_row(const Table2Row& row);
json table2_row_to_json(const Table2Row& row);

/// Human-readable polynomial like "t^5 + 4*t + {13}"; extension-field
/// coefficients appear as {integer encoding}.
std::string poly_to_string(const Poly& f, const std::string& var = "t");

} // namespace mwlat::io
