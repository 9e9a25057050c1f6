// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#include "mwlat/io.hpp"

#include "mwlat/errors.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace mwlat::io {

std::string rational_to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
    try {
        Rational out(text);
        out.canonicalize();
        return out;
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational: '" + text + "'");
    }
}

json field_to_json(const FieldCtx& ctx) {
    json out;
    out["p"] = ctx.p;
    out["s"] = ctx.s;
    out["modulus_coeffs"] = ctx.modulus;
    return out;
}

namespace {

std::vector<std::string> encode_poly(const Poly& f) {
    std::vector<std::string> out;
    for (const auto& c : f.coefficients()) out.push_back(c.to_integer().get_str());
    return out;
}

Poly decode_poly(const FieldCtx& ctx, const json& arr) {
    if (!arr.is_array()) throw parse_error("polynomial coefficients must be an array");
    std::vector<FieldElement> coeffs;
    for (const auto& v : arr) {
        if (!v.is_string()) throw parse_error("polynomial coefficients must be encoded as strings");
        coeffs.push_back(FieldElement::from_integer(ctx, BigInt(v.get<std::string>())));
    }
    return Poly::from_coeffs(ctx, std::move(coeffs));
}

} // namespace

json points_to_json(const FieldCtx& ctx, const std::vector<CurvePoint>& points) {
    json out;
    out["field"] = field_to_json(ctx);
    json arr = json::array();
    for (const auto& P : points) {
        if (P.is_identity()) {
            arr.push_back(json{{"identity", true}});
            continue;
        }
        json obj;
        obj["x_num"] = encode_poly(P.x().num());
        obj["x_den"] = encode_poly(P.x().den());
        obj["y_num"] = encode_poly(P.y().num());
        obj["y_den"] = encode_poly(P.y().den());
        arr.push_back(std::move(obj));
    }
    out["points"] = std::move(arr);
    return out;
}

std::vector<CurvePoint> points_from_json(const FieldCtx& ctx, const json& doc) {
    if (!doc.contains("field") || !doc.contains("points")) throw parse_error("missing field/points keys");
    if (doc["field"]["p"].get<unsigned long>() != ctx.p || doc["field"]["s"].get<unsigned long>() != ctx.s)
        throw parse_error("point set belongs to a different field");
    std::vector<CurvePoint> out;
    for (const auto& obj : doc["points"]) {
        if (obj.contains("identity")) {
            out.push_back(CurvePoint::identity());
            continue;
        }
        RationalFunction x(decode_poly(ctx, obj.at("x_num")), decode_poly(ctx, obj.at("x_den")));
        RationalFunction y(decode_poly(ctx, obj.at("y_num")), decode_poly(ctx, obj.at("y_den")));
        out.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

json gram_to_json(const GramMatrix& g) {
    BigInt scale = g.scale();
    json out;
    out["n_gen"] = g.n_gen();
    out["scale"] = scale.get_str();
    json entries = json::array();
    for (size_t i = 0; i < g.n_gen(); ++i)
        for (size_t j = i; j < g.n_gen(); ++j) {
            Rational scaled = g.entries[i][j] * Rational(scale);
            if (scaled.get_den() != 1) throw internal_error("gram export: scale does not clear denominators");
            entries.push_back(scaled.get_num().get_str());
        }
    out["entries"] = std::move(entries);
    return out;
}

GramMatrix gram_from_json(const json& doc) {
    size_t n = doc.at("n_gen").get<size_t>();
    BigInt scale(doc.at("scale").get<std::string>());
    if (scale <= 0) throw parse_error("gram scale must be positive");
    const auto& entries = doc.at("entries");
    if (entries.size() != n * (n + 1) / 2) throw parse_error("gram entry count mismatch");
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    size_t k = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            Rational v(BigInt(entries[k++].get<std::string>()), scale);
            v.canonicalize();
            m[i][j] = m[j][i] = v;
        }
    return gram_from_entries(std::move(m));
}

namespace {

std::string next_content_line(std::istream& in, const char* what) {
    std::string line;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        size_t end = line.find_last_not_of(" \t\r");
        return line.substr(start, end - start + 1);
    }
    throw parse_error(std::string("unexpected end of file, expected ") + what);
}

std::vector<long long> parse_vector_token(const std::string& tok) {
    if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']')
        throw parse_error("expected a bracketed coefficient vector, got '" + tok + "'");
    std::vector<long long> out;
    std::string inner = tok.substr(1, tok.size() - 2);
    if (inner.find_first_not_of(" \t") == std::string::npos) return out;
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw parse_error("malformed coefficient '" + item + "'");
        }
    }
    return out;
}

FieldElement element_from_encoding(const FieldCtx& ctx, long long v) {
    if (v < 0) return FieldElement::from_int(ctx, static_cast<long>(v)); // prime-subfield shorthand
    BigInt enc(static_cast<unsigned long>(v));
    if (enc >= ctx.r) throw parse_error("coefficient encoding " + std::to_string(v) + " is >= field size");
    return FieldElement::from_integer(ctx, enc);
}

Poly poly_from_encodings(const FieldCtx& ctx, const std::vector<long long>& vals) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(vals.size());
    for (long long v : vals) coeffs.push_back(element_from_encoding(ctx, v));
    return Poly::from_coeffs(ctx, std::move(coeffs));
}

void parse_p_s(const std::string& line, unsigned long& p, unsigned long& s) {
    std::stringstream ss(line);
    if (!(ss >> p >> s)) throw parse_error("expected 'p s' line, got '" + line + "'");
}

} // namespace

ModelFile parse_model_file(std::istream& in) {
    std::string header = next_content_line(in, "header");
    if (header != "MWLAT1 model") throw parse_error("bad model header: '" + header + "'");
    ModelFile out;
    parse_p_s(next_content_line(in, "p s line"), out.p, out.s);
    for (auto& vec : out.coeffs) vec = parse_vector_token(next_content_line(in, "coefficient vector"));
    return out;
}

WeierstrassCurve curve_from_model(const FieldCtx& ctx, const ModelFile& model) {
    if (ctx.p != model.p || ctx.s != model.s) throw parse_error("model field does not match context");
    return WeierstrassCurve(poly_from_encodings(ctx, model.coeffs[0]), poly_from_encodings(ctx, model.coeffs[1]),
                            poly_from_encodings(ctx, model.coeffs[2]), poly_from_encodings(ctx, model.coeffs[3]),
                            poly_from_encodings(ctx, model.coeffs[4]));
}

PointsFile parse_points_file(std::istream& in) {
    std::string header = next_content_line(in, "header");
    if (header != "MWLAT1 points") throw parse_error("bad points header: '" + header + "'");
    PointsFile out;
    parse_p_s(next_content_line(in, "p s line"), out.p, out.s);
    std::string line;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::stringstream ss(line);
        std::string tok;
        ss >> tok;
        if (tok == "identity") {
            out.points.push_back(std::nullopt);
            continue;
        }
        std::array<std::vector<long long>, 4> vecs;
        vecs[0] = parse_vector_token(tok);
        for (int i = 1; i < 4; ++i) {
            if (!(ss >> tok)) throw parse_error("point line needs four coefficient vectors");
            vecs[i] = parse_vector_token(tok);
        }
        out.points.push_back(std::move(vecs));
    }
    return out;
}

std::vector<CurvePoint> points_from_parsed(const FieldCtx& ctx, const PointsFile& file) {
    if (ctx.p != file.p || ctx.s != file.s) throw parse_error("points field does not match context");
    std::vector<CurvePoint> out;
    for (const auto& entry : file.points) {
        if (!entry) {
            out.push_back(CurvePoint::identity());
            continue;
        }
        Poly xd = poly_from_encodings(ctx, (*entry)[1]);
        Poly yd = poly_from_encodings(ctx, (*entry)[3]);
        if (xd.is_zero() || yd.is_zero()) throw parse_error("point denominator is zero");
        RationalFunction x(poly_from_encodings(ctx, (*entry)[0]), std::move(xd));
        RationalFunction y(poly_from_encodings(ctx, (*entry)[2]), std::move(yd));
        out.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

namespace {

std::string poly_line_token(const Poly& f) {
    std::string out = "[";
    const auto& cs = f.coefficients();
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ",";
        out += cs[i].to_integer().get_str();
    }
    return out + "]";
}

} // namespace

void write_points_file(std::ostream& out, const FieldCtx& ctx, const std::vector<CurvePoint>& points) {
    out << "MWLAT1 points\n" << ctx.p << " " << ctx.s << "\n";
    for (const auto& P : points) {
        if (P.is_identity()) {
            out << "identity\n";
            continue;
        }
        out << poly_line_token(P.x().num()) << " " << poly_line_token(P.x().den()) << " "
            << poly_line_token(P.y().num()) << " " << poly_line_token(P.y().den()) << "\n";
    }
}

std::string table1_csv_header() { return "q,r,delta_computed,delta_prop47,dimension,best_known,sha_lower"; }

namespace {

std::string best_known_cell(const std::optional<double>& v) {
    if (!v) return "";
    std::ostringstream os;
    os << *v;
    return os.str();
}

} // namespace

std::string table1_csv_row(const Table1Row& row) {
    std::ostringstream os;
    os << row.q << "," << row.r.get_str() << "," << row.delta_computed.decimal() << ","
       << row.delta_analytic.decimal() << "," << row.dimension << "," << best_known_cell(row.best_known)
       << "," << decimal_string(row.sha_lower);
    return os.str();
}

json table1_row_to_json(const Table1Row& row) {
    json out;
    out["q"] = row.q;
    out["r"] = row.r.get_str();
    out["p"] = row.p;
    out["c"] = row.c;
    out["s"] = row.s;
    out["dimension"] = row.dimension;
    out["nmin"] = rational_to_string(row.nmin);
    out["lattice_det"] = rational_to_string(row.lattice_det);
    out["delta_computed"] = row.delta_computed.decimal();
    out["delta_computed_squared"] = rational_to_string(row.delta_computed.squared());
    out["delta_prop47"] = row.delta_analytic.decimal();
    out["delta_prop47_squared"] = rational_to_string(row.delta_analytic.squared());
    out["sha_lower"] = rational_to_string(row.sha_lower);
    out["sha_nontrivial"] = row.sha_nontrivial;
    if (row.best_known) out["best_known"] = *row.best_known;
    if (row.e8) out["is_e8"] = *row.e8;
    if (row.min_norm_found) out["min_norm_found"] = rational_to_string(*row.min_norm_found);
    out["density"] = row.density;
    return out;
}

std::string table2_csv_header() { return "p,f,dimension,delta_bound,best_known"; }

std::string table2_csv_row(const Table2Row& row) {
    std::ostringstream os;
    os << row.p << "," << row.f << "," << row.dimension << "," << row.delta_bound.decimal() << ","
       << best_known_cell(row.best_known);
    return os.str();
}

json table2_row_to_json(const Table2Row& row) {
    json out;
    out["p"] = row.p;
    out["f"] = row.f;
    out["d"] = row.d;
    out["dimension"] = row.dimension;
    out["nmin_bound"] = rational_to_string(row.nmin_bound);
    out["lattice_det"] = rational_to_string(row.lattice_det);
    out["delta_bound"] = row.delta_bound.decimal();
    out["delta_bound_squared"] = rational_to_string(row.delta_bound.squared());
    if (row.enumerated_min_norm) out["enumerated_min_norm"] = rational_to_string(*row.enumerated_min_norm);
    if (row.best_known) out["best_known"] = *row.best_known;
    out["density"] = row.density;
    return out;
}

std::string poly_to_string(const Poly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string out;
    const FieldCtx& ctx = f.ctx();
    for (size_t i = f.coefficients().size(); i-- > 0;) {
        const FieldElement& c = f.coefficients()[i];
        if (c.is_zero()) continue;
        BigInt enc = c.to_integer();
        std::string coeff_str = enc < ctx.p ? enc.get_str() : "{" + enc.get_str() + "}";
        std::string term;
        if (i == 0) {
            term = coeff_str;
        } else {
            term = (c.is_one() ? "" : coeff_str + "*") + var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

} // namespace mwlat::io
