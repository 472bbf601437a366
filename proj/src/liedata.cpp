#include "blockcheck/liedata.hpp"

#include <fstream>
#include <map>

#include <json.hpp>

namespace blockcheck {

std::string family_name(LieFamily f) {
    switch (f) {
        case LieFamily::A: return "A";
        case LieFamily::TwoA: return "2A";
        case LieFamily::B: return "B";
        case LieFamily::C: return "C";
        case LieFamily::D: return "D";
        case LieFamily::TwoD: return "2D";
        case LieFamily::ThreeD4: return "3D4";
        case LieFamily::G2: return "G2";
        case LieFamily::TwoG2: return "2G2";
        case LieFamily::F4: return "F4";
        case LieFamily::E6: return "E6";
        case LieFamily::TwoE6: return "2E6";
        case LieFamily::E7: return "E7";
        case LieFamily::E8: return "E8";
    }
    return "?";
}

bool family_is_exceptional(LieFamily f) {
    switch (f) {
        case LieFamily::ThreeD4:
        case LieFamily::G2:
        case LieFamily::TwoG2:
        case LieFamily::F4:
        case LieFamily::E6:
        case LieFamily::TwoE6:
        case LieFamily::E7:
        case LieFamily::E8:
            return true;
        default:
            return false;
    }
}

std::string series_name(const LieSeries& s) {
    std::string name = family_name(s.family);
    if (!family_is_exceptional(s.family)) name += std::to_string(s.rank);
    if (s.field_power != 1) name += "(q^" + std::to_string(s.field_power) + ")";
    return name;
}

std::optional<LieFamily> parse_family(const std::string& s) {
    static const std::map<std::string, LieFamily> table = {
        {"A", LieFamily::A},     {"2A", LieFamily::TwoA}, {"B", LieFamily::B},
        {"C", LieFamily::C},     {"D", LieFamily::D},     {"2D", LieFamily::TwoD},
        {"3D4", LieFamily::ThreeD4}, {"G2", LieFamily::G2},  {"2G2", LieFamily::TwoG2},
        {"F4", LieFamily::F4},   {"E6", LieFamily::E6},   {"2E6", LieFamily::TwoE6},
        {"E7", LieFamily::E7},   {"E8", LieFamily::E8}};
    auto it = table.find(s);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

namespace {

struct OrderShape {
    long qpow;
    std::vector<std::pair<unsigned, int>> factors;  // (m, sign): q^m - sign
};

OrderShape order_shape(const LieSeries& s) {
    const unsigned l = s.rank;
    OrderShape sh;
    auto fminus = [&sh](unsigned m) { sh.factors.emplace_back(m, +1); };
    auto fplus = [&sh](unsigned m) { sh.factors.emplace_back(m, -1); };
    switch (s.family) {
        case LieFamily::A:
            if (l < 1) throw std::invalid_argument("A_l needs l >= 1");
            sh.qpow = static_cast<long>(l) * (l + 1) / 2;
            for (unsigned i = 2; i <= l + 1; ++i) fminus(i);
            break;
        case LieFamily::TwoA:
            if (l < 1) throw std::invalid_argument("2A_l needs l >= 1");
            sh.qpow = static_cast<long>(l) * (l + 1) / 2;
            for (unsigned i = 2; i <= l + 1; ++i)
                (i % 2 == 0) ? fminus(i) : fplus(i);
            break;
        case LieFamily::B:
        case LieFamily::C:
            if (l < 1) throw std::invalid_argument("B_l/C_l needs l >= 1");
            sh.qpow = static_cast<long>(l) * l;
            for (unsigned i = 1; i <= l; ++i) fminus(2 * i);
            break;
        case LieFamily::D:
            if (l < 2) throw std::invalid_argument("D_l needs l >= 2");
            sh.qpow = static_cast<long>(l) * (l - 1);
            for (unsigned i = 1; i < l; ++i) fminus(2 * i);
            fminus(l);
            break;
        case LieFamily::TwoD:
            if (l < 2) throw std::invalid_argument("2D_l needs l >= 2");
            sh.qpow = static_cast<long>(l) * (l - 1);
            for (unsigned i = 1; i < l; ++i) fminus(2 * i);
            fplus(l);
            break;
        case LieFamily::ThreeD4:
            if (l != 4) throw std::invalid_argument("3D4 has rank 4");
            sh.qpow = 12;
            // q^12 (q^8 + q^4 + 1)(q^6 - 1)(q^2 - 1); the first factor enters
            // as (q^12 - 1)/(q^4 - 1) below.
            fminus(12);
            fminus(6);
            fminus(2);
            sh.factors.emplace_back(4, +2);  // divide by q^4 - 1 (marker, handled below)
            break;
        case LieFamily::G2:
            if (l != 2) throw std::invalid_argument("G2 has rank 2");
            sh.qpow = 6;
            fminus(2);
            fminus(6);
            break;
        case LieFamily::TwoG2:
            if (l != 2) throw std::invalid_argument("2G2 has rank 2");
            sh.qpow = 3;
            fplus(3);
            fminus(1);
            break;
        case LieFamily::F4:
            if (l != 4) throw std::invalid_argument("F4 has rank 4");
            sh.qpow = 24;
            for (unsigned i : {2u, 6u, 8u, 12u}) fminus(i);
            break;
        case LieFamily::E6:
            if (l != 6) throw std::invalid_argument("E6 has rank 6");
            sh.qpow = 36;
            for (unsigned i : {2u, 5u, 6u, 8u, 9u, 12u}) fminus(i);
            break;
        case LieFamily::TwoE6:
            if (l != 6) throw std::invalid_argument("2E6 has rank 6");
            sh.qpow = 36;
            fminus(2);
            fplus(5);
            fminus(6);
            fminus(8);
            fplus(9);
            fminus(12);
            break;
        case LieFamily::E7:
            if (l != 7) throw std::invalid_argument("E7 has rank 7");
            sh.qpow = 63;
            for (unsigned i : {2u, 6u, 8u, 10u, 12u, 14u, 18u}) fminus(i);
            break;
        case LieFamily::E8:
            if (l != 8) throw std::invalid_argument("E8 has rank 8");
            sh.qpow = 120;
            for (unsigned i : {2u, 8u, 12u, 14u, 18u, 20u, 24u, 30u}) fminus(i);
            break;
    }
    return sh;
}

}  // namespace

CycProduct group_order(const LieSeries& s) {
    OrderShape sh = order_shape(s);
    CycProduct p = CycProduct::q_power(sh.qpow);
    for (const auto& [m, sign] : sh.factors) {
        if (sign == +1)
            p *= CycProduct::q_pow_minus_one(m);
        else if (sign == -1)
            p *= CycProduct::q_pow_plus_one(m);
        else  // divisor marker used by 3D4
            p /= CycProduct::q_pow_minus_one(m);
    }
    if (s.field_power != 1) p = p.inflate(s.field_power);
    p.require_effective("group_order");
    return p;
}

CycProduct order_rprime(const LieSeries& s) {
    CycProduct p = group_order(s);
    return p / CycProduct::q_power(p.qpow());
}

Int group_order_raw(const LieSeries& s, const Int& q) {
    OrderShape sh = order_shape(s);
    Int x;
    mpz_pow_ui(x.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(s.field_power));
    Int acc;
    mpz_pow_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(sh.qpow));
    Rat r(acc);
    for (const auto& [m, sign] : sh.factors) {
        Int t;
        mpz_pow_ui(t.get_mpz_t(), x.get_mpz_t(), m);
        if (sign == +1)
            r *= Rat(t - 1);
        else if (sign == -1)
            r *= Rat(t + 1);
        else
            r /= Rat(t - 1);
    }
    r.canonicalize();
    if (r.get_den() != 1) throw std::logic_error("group_order_raw: non-integral");
    return r.get_num();
}

namespace {

CycProduct make_degree(const Rat& scalar, long qpow, std::map<unsigned, long> phis) {
    CycProduct d(scalar, qpow, std::move(phis));
    d.require_effective("named degree");
    return d;
}

std::vector<NamedUnipotent> build_catalog() {
    std::vector<NamedUnipotent> cat;
    const LieSeries e6{LieFamily::E6, 6};
    const LieSeries twoe6{LieFamily::TwoE6, 6};
    const LieSeries e7{LieFamily::E7, 7};
    const LieSeries f4{LieFamily::F4, 4};
    const LieSeries d43{LieFamily::ThreeD4, 4};
    const LieSeries a2{LieFamily::A, 2};

    CycProduct e6theta = make_degree(Rat(1, 3), 7, {{1, 6}, {2, 4}, {4, 2}, {5, 1}, {8, 1}});
    cat.push_back({e6, "E6[theta]", e6theta});
    cat.push_back({e6, "E6[theta^2]", e6theta});

    CycProduct twoe6theta = make_degree(Rat(1, 3), 7, {{1, 4}, {2, 6}, {4, 2}, {8, 1}, {10, 1}});
    cat.push_back({twoe6, "2E6[theta]", twoe6theta});
    cat.push_back({twoe6, "2E6[theta^2]", twoe6theta});

    CycProduct e7theta = make_degree(
        Rat(1, 3), 7, {{1, 6}, {2, 6}, {4, 2}, {5, 1}, {7, 1}, {8, 1}, {10, 1}, {14, 1}});
    cat.push_back({e7, "(E6[theta],1)", e7theta});
    cat.push_back({e7, "(E6[theta^2],1)", e7theta});
    cat.push_back({e7, "(E6[theta],eps)", e7theta});
    cat.push_back({e7, "(E6[theta^2],eps)", e7theta});

    CycProduct f4i = make_degree(Rat(1, 4), 4, {{1, 4}, {2, 4}, {3, 2}, {6, 2}});
    cat.push_back({f4, "F4[i]", f4i});
    cat.push_back({f4, "F4[-i]", f4i});

    cat.push_back({d43, "phi_{2,1}", make_degree(Rat(1, 2), 1, {{2, 2}, {6, 2}})});
    cat.push_back({d43, "phi_{2,2}", make_degree(Rat(1, 2), 3, {{2, 2}, {12, 1}})});
    cat.push_back({d43, "3D4[1]", make_degree(Rat(1, 2), 3, {{1, 2}, {12, 1}})});
    cat.push_back({d43, "3D4[-1]", make_degree(Rat(1, 2), 1, {{1, 2}, {3, 2}})});

    cat.push_back({a2, "chi^(2,1)", make_degree(Rat(1), 1, {{2, 1}})});
    return cat;
}

}  // namespace

const std::vector<NamedUnipotent>& named_degree_catalog() {
    static const std::vector<NamedUnipotent> cat = build_catalog();
    return cat;
}

const NamedUnipotent& named_degree(const std::string& label) {
    for (const NamedUnipotent& u : named_degree_catalog()) {
        if (series_name(u.series) + ":" + u.label == label || u.label == label) return u;
    }
    throw std::invalid_argument("named_degree: unknown label " + label);
}

long named_defect(const NamedUnipotent& u, const Int& q) {
    CycProduct quotient = group_order(u.series) / u.degree;
    return quotient.v2_at(q);
}

std::vector<NamedUnipotent> load_degree_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open degree catalog: " + path);
    std::vector<NamedUnipotent> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        nlohmann::json j = nlohmann::json::parse(line);
        auto fam = parse_family(j.at("family").get<std::string>());
        if (!fam) throw std::runtime_error("degree catalog line " + std::to_string(lineno) + ": bad family");
        LieSeries series{*fam, j.at("rank").get<unsigned>(), j.value("field_power", 1u)};
        NamedUnipotent u{series, j.at("label").get<std::string>(),
                         CycProduct::from_structured(j.at("degree").dump())};
        u.degree.require_effective("catalog degree");
        CycProduct quotient = group_order(series) / u.degree;
        Int q3(3);
        if (quotient.eval(q3).get_den() != 1)
            throw std::runtime_error("degree catalog line " + std::to_string(lineno) +
                                     ": degree does not divide the group order at q=3");
        out.push_back(std::move(u));
    }
    return out;
}

}  // namespace blockcheck
