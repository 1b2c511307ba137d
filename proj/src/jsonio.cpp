#include "yrk/jsonio.hpp"

#include <fstream>

namespace yrk {

json scalar_to_json(const Scalar& s) {
    if (s.is_exact()) {
        std::string re = s.exact_re().get_str();
        if (s.exact_im() == 0) return re;
        return json::array({re, s.exact_im().get_str()});
    }
    auto z = s.to_complex();
    if (z.imag() == 0.0) return z.real();
    return json::array({z.real(), z.imag()});
}

Scalar scalar_from_json(const json& j, Backend preferred) {
    if (j.is_string()) return parse_exact_scalar(j.get<std::string>());
    if (j.is_number()) {
        if (preferred == Backend::exact && j.is_number_integer())
            return Scalar::exact_int(j.get<long>());
        return Scalar::flt(j.get<double>());
    }
    if (j.is_array() && j.size() == 2) {
        if (j[0].is_string()) {
            Scalar re = parse_exact_scalar(j[0].get<std::string>());
            Scalar im = parse_exact_scalar(j[1].get<std::string>());
            return Scalar(re.exact_re(), im.exact_re());
        }
        if (preferred == Backend::exact && j[0].is_number_integer() && j[1].is_number_integer())
            return Scalar(mpq_class(j[0].get<long>()), mpq_class(j[1].get<long>()));
        return Scalar::flt(j[0].get<double>(), j[1].get<double>());
    }
    throw math_domain_error("unrecognized scalar encoding in JSON");
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const json& j, Backend preferred) {
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    Matrix m(rows, cols, preferred);
    for (int a = 0; a < rows; ++a)
        for (int b = 0; b < cols; ++b) {
            Scalar s = scalar_from_json(j[static_cast<size_t>(a)][static_cast<size_t>(b)], preferred);
            if (s.backend() != preferred) s = preferred == Backend::floating ? s.to_float() : s;
            m(a, b) = s;
        }
    return m;
}

json cartan_to_json(const CartanData& c) {
    json j;
    if (c.type() != "custom") {
        j["type"] = c.type();
        return j;
    }
    j["cartan"] = c.cartan_matrix();
    j["d"] = c.symmetrizers();
    j["hdual"] = c.hdual();
    j["m"] = c.m();
    return j;
}

CartanData cartan_from_json(const json& j) {
    if (j.contains("type")) {
        std::string t = j["type"].get<std::string>();
        if (t == "A1") return CartanData::A1();
        if (t == "A2") return CartanData::A2();
        if (t == "B2" || t == "C2") return CartanData::B2();
        throw math_domain_error("unknown Cartan type " + t);
    }
    return CartanData::custom(j["cartan"].get<std::vector<std::vector<int>>>(),
                              j["d"].get<std::vector<int>>(), j["hdual"].get<int>(),
                              j["m"].get<int>());
}

namespace {

json matrices_to_json(const std::vector<Matrix>& ms) {
    if (ms.size() == 1) return matrix_to_json(ms.front());
    json arr = json::array();
    for (const auto& m : ms) arr.push_back(matrix_to_json(m));
    return arr;
}

std::vector<Matrix> matrices_from_json(const json& j, int rank, Backend bk) {
    std::vector<Matrix> out;
    bool per_node = j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() &&
                    j[0][0].is_array();
    if (per_node) {
        for (const auto& m : j) out.push_back(matrix_from_json(m, bk));
    } else {
        out.push_back(matrix_from_json(j, bk));
    }
    if (static_cast<int>(out.size()) != rank)
        throw math_domain_error("generator list does not match the rank");
    return out;
}

} // namespace

json representation_to_json(const Representation& v) {
    json j;
    j["cartan"] = cartan_to_json(v.cartan());
    j["hbar"] = scalar_to_json(v.hbar());
    j["dim"] = v.dim();
    j["backend"] = v.backend() == Backend::exact ? "exact" : "float";
    std::vector<Matrix> xi, xp, xm, t1;
    for (int i = 0; i < v.rank(); ++i) {
        xi.push_back(v.xi0(i));
        xp.push_back(v.xp0(i));
        xm.push_back(v.xm0(i));
        t1.push_back(v.t1(i));
    }
    j["xi0"] = matrices_to_json(xi);
    j["xp0"] = matrices_to_json(xp);
    j["xm0"] = matrices_to_json(xm);
    j["t1"] = matrices_to_json(t1);
    json poles = json::array();
    for (const auto& p : v.poles()) poles.push_back(scalar_to_json(p));
    j["poles"] = poles;
    j["provenance"] = {{"kind", v.provenance().describe()}};
    return j;
}

Representation representation_from_json(const json& j) {
    CartanData c = cartan_from_json(j["cartan"]);
    Backend bk = Backend::exact;
    if (j.contains("backend") && j["backend"].get<std::string>() == "float")
        bk = Backend::floating;
    Scalar hbar = scalar_from_json(j["hbar"], bk);
    if (hbar.backend() != bk && bk == Backend::floating) hbar = hbar.to_float();
    auto xi = matrices_from_json(j["xi0"], c.rank(), bk);
    auto xp = matrices_from_json(j["xp0"], c.rank(), bk);
    auto xm = matrices_from_json(j["xm0"], c.rank(), bk);
    auto t1 = matrices_from_json(j["t1"], c.rank(), bk);
    std::vector<Scalar> poles;
    if (j.contains("poles"))
        for (const auto& p : j["poles"]) {
            Scalar s = scalar_from_json(p, bk);
            poles.push_back(s.backend() == bk ? s : s.to_float());
        }
    Provenance prov;
    prov.kind = Provenance::Kind::user;
    return Representation::from_generators(c, hbar, std::move(xi), std::move(xp), std::move(xm),
                                           std::move(t1), std::move(poles), std::move(prov));
}

json ratmat_to_json(const RatMat& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (int a = 0; a < m.rows(); ++a) {
        json row = json::array();
        for (int b = 0; b < m.cols(); ++b) {
            json e;
            json num = json::array(), den = json::array();
            for (int k = 0; k <= m(a, b).num().degree(); ++k)
                num.push_back(scalar_to_json(m(a, b).num().coeff(k)));
            for (int k = 0; k <= m(a, b).den().degree(); ++k)
                den.push_back(scalar_to_json(m(a, b).den().coeff(k)));
            e["num"] = num;
            e["den"] = den;
            row.push_back(e);
        }
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j;
}

RatMat ratmat_from_json(const json& j, Backend preferred) {
    int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
    RatMat m(rows, cols, preferred);
    for (int a = 0; a < rows; ++a)
        for (int b = 0; b < cols; ++b) {
            const json& e = j["entries"][static_cast<size_t>(a)][static_cast<size_t>(b)];
            std::vector<Scalar> num, den;
            for (const auto& c : e["num"]) num.push_back(scalar_from_json(c, preferred));
            for (const auto& c : e["den"]) den.push_back(scalar_from_json(c, preferred));
            if (den.empty()) throw math_domain_error("empty denominator in rational entry");
            m(a, b) = RatFun(Poly(num), Poly(den));
        }
    return m;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace yrk
