#ifndef CCR_WEIGHTED_POLY_HPP
#define CCR_WEIGHTED_POLY_HPP

#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <ccr/bigint.hpp>
#include <ccr/errors.hpp>
#include <ccr/kind.hpp>
#include <ccr/mpoly.hpp>

namespace ccr
{

// A CCR polynomial U, V or W in X, Y, Z. With modulus != 0 the coefficients
// are residues in [0, modulus).
struct WeightedPoly
{
    Kind kind = Kind::U;
    long ell = 0;
    std::uint64_t modulus = 0;
    MPoly<BigRat> poly;

    friend bool operator==(const WeightedPoly &a, const WeightedPoly &b)
    {
        return a.kind == b.kind && a.ell == b.ell && a.modulus == b.modulus && a.poly == b.poly;
    }
};

// N_{ell,A} (which = 'A') or N_{ell,B} (which = 'B') in X, A, B.
struct NumeratorPoly
{
    char which = 'A';
    long ell = 0;
    std::uint64_t modulus = 0;
    MPoly<BigRat> poly;

    friend bool operator==(const NumeratorPoly &a, const NumeratorPoly &b)
    {
        return a.which == b.which && a.ell == b.ell && a.modulus == b.modulus && a.poly == b.poly;
    }
};

// Total weight of every monomial when X, Y, Z have weights wx, 2, 3.
inline bool is_weighted_homogeneous(const MPoly<BigRat> &p, int wx, long total)
{
    for (const auto &[m, c] : p.terms()) {
        (void)c;
        if (wx * m[0] + 2 * m[1] + 3 * m[2] != total) {
            return false;
        }
    }
    return true;
}

inline long expected_weight(const WeightedPoly &p)
{
    return kind_weight(p.kind) * (p.ell + 1);
}

inline long expected_weight(const NumeratorPoly &p)
{
    return p.ell + (p.which == 'A' ? 2 : 3);
}

// Reduces rational coefficients modulo p.
inline MPoly<BigRat> reduce_mod(const MPoly<BigRat> &poly, std::uint64_t p)
{
    return poly.map([p](const BigRat &c) {
        const FpElem den = FpElem::from_integer(c.get_den(), p);
        if (den.value() == 0) {
            throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
        }
        return BigRat(from_u64((FpElem::from_integer(c.get_num(), p) / den).value()));
    });
}

inline WeightedPoly reduce_mod(const WeightedPoly &w, std::uint64_t p)
{
    WeightedPoly r{w.kind, w.ell, p, reduce_mod(w.poly, p)};
    return r;
}

struct HeightStats
{
    double height = 0;          // natural log of the largest |numerator|
    double relative_height = 0; // height / ((ell + 1) log ell)
    std::size_t bit_size = 0;   // sum of numerator bit lengths
};

inline double log_abs(const BigInt &n)
{
    long e = 0;
    const double m = mpz_get_d_2exp(&e, n.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

inline HeightStats height_stats(const MPoly<BigRat> &poly, long ell)
{
    if (poly.is_zero()) {
        throw std::invalid_argument("height of the zero polynomial");
    }
    HeightStats s;
    BigInt best = 0;
    for (const auto &[m, c] : poly.terms()) {
        (void)m;
        const BigInt a = abs(c.get_num());
        s.bit_size += bit_length(a);
        if (a > best) {
            best = a;
        }
    }
    s.height = log_abs(best);
    s.relative_height = s.height / (static_cast<double>(ell + 1) * std::log(static_cast<double>(ell)));
    return s;
}

namespace detail
{

inline std::string coeff_text(const BigRat &c)
{
    return to_string(c);
}

inline void write_terms(std::ostream &os, const MPoly<BigRat> &p)
{
    for (const auto &[m, c] : p.terms()) {
        os << m[0] << ' ' << m[1] << ' ' << m[2] << ' ' << coeff_text(c) << '\n';
    }
}

inline nlohmann::json terms_json(const MPoly<BigRat> &p)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &[m, c] : p.terms()) {
        arr.push_back({{"i1", m[0]}, {"i2", m[1]}, {"i3", m[2]}, {"coeff", coeff_text(c)}});
    }
    return arr;
}

// Parses "key=value" header fields after the format tag.
inline std::vector<std::pair<std::string, std::string>> header_fields(const std::string &line, const std::string &tag)
{
    std::istringstream is(line);
    std::string first;
    is >> first;
    if (first != tag) {
        throw parse_error(1, "expected header starting with '" + tag + "'");
    }
    std::vector<std::pair<std::string, std::string>> out;
    std::string tok;
    while (is >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) {
            throw parse_error(1, "malformed header field '" + tok + "'");
        }
        out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    return out;
}

inline long parse_long(const std::string &s, std::size_t line, const std::string &what)
{
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception &) {
        throw parse_error(line, "malformed " + what + " '" + s + "'");
    }
}

inline MPoly<BigRat> read_terms(std::istream &is, std::size_t first_line)
{
    MPoly<BigRat>::Terms terms;
    std::string line;
    std::size_t lineno = first_line;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream ls(line);
        std::string a, b, c, d, extra;
        if (!(ls >> a >> b >> c >> d) || (ls >> extra)) {
            throw parse_error(lineno, "expected 'i1 i2 i3 coefficient'");
        }
        const Monomial m{static_cast<int>(parse_long(a, lineno, "exponent")),
                         static_cast<int>(parse_long(b, lineno, "exponent")),
                         static_cast<int>(parse_long(c, lineno, "exponent"))};
        if (m[0] < 0 || m[1] < 0 || m[2] < 0) {
            throw parse_error(lineno, "negative exponent");
        }
        BigRat coeff;
        try {
            coeff = parse_rational(d);
        } catch (const std::invalid_argument &e) {
            throw parse_error(lineno, e.what());
        }
        if (terms.count(m) != 0) {
            throw parse_error(lineno, "duplicate monomial");
        }
        if (sgn(coeff) != 0) {
            terms.emplace(m, coeff);
        }
    }
    return MPoly<BigRat>(std::move(terms));
}

inline MPoly<BigRat> json_terms(const nlohmann::json &arr)
{
    MPoly<BigRat>::Terms terms;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto &t = arr[i];
        const Monomial m{t.at("i1").get<int>(), t.at("i2").get<int>(), t.at("i3").get<int>()};
        BigRat c;
        try {
            c = parse_rational(t.at("coeff").get<std::string>());
        } catch (const std::invalid_argument &e) {
            throw parse_error(i + 1, e.what());
        }
        if (terms.count(m) != 0) {
            throw parse_error(i + 1, "duplicate monomial");
        }
        if (sgn(c) != 0) {
            terms.emplace(m, c);
        }
    }
    return MPoly<BigRat>(std::move(terms));
}

} // namespace detail

inline void write_text(std::ostream &os, const WeightedPoly &p)
{
    os << "CCR kind=" << kind_letter(p.kind) << " ell=" << p.ell;
    if (p.modulus != 0) {
        os << " mod=" << p.modulus;
    }
    os << '\n';
    detail::write_terms(os, p.poly);
}

inline void write_text(std::ostream &os, const NumeratorPoly &p)
{
    os << "CCRNUM which=" << p.which << " ell=" << p.ell;
    if (p.modulus != 0) {
        os << " mod=" << p.modulus;
    }
    os << '\n';
    detail::write_terms(os, p.poly);
}

inline std::string to_text(const WeightedPoly &p)
{
    std::ostringstream os;
    write_text(os, p);
    return os.str();
}

inline std::string to_text(const NumeratorPoly &p)
{
    std::ostringstream os;
    write_text(os, p);
    return os.str();
}

inline nlohmann::json to_json(const WeightedPoly &p)
{
    nlohmann::json j;
    j["format"] = "CCR";
    j["kind"] = std::string(1, kind_letter(p.kind));
    j["ell"] = p.ell;
    j["mod"] = p.modulus == 0 ? nlohmann::json(nullptr) : nlohmann::json(p.modulus);
    j["monomials"] = detail::terms_json(p.poly);
    return j;
}

inline nlohmann::json to_json(const NumeratorPoly &p)
{
    nlohmann::json j;
    j["format"] = "CCRNUM";
    j["which"] = std::string(1, p.which);
    j["ell"] = p.ell;
    j["mod"] = p.modulus == 0 ? nlohmann::json(nullptr) : nlohmann::json(p.modulus);
    j["monomials"] = detail::terms_json(p.poly);
    return j;
}

// Either kind of polynomial file.
struct PolyFile
{
    std::optional<WeightedPoly> ccr;
    std::optional<NumeratorPoly> numerator;

    const MPoly<BigRat> &poly() const
    {
        return ccr ? ccr->poly : numerator->poly;
    }
    long ell() const
    {
        return ccr ? ccr->ell : numerator->ell;
    }
    std::uint64_t modulus() const
    {
        return ccr ? ccr->modulus : numerator->modulus;
    }
    std::string label() const
    {
        if (ccr) {
            return std::string(1, kind_letter(ccr->kind)) + "_" + std::to_string(ccr->ell);
        }
        return "N_" + std::to_string(numerator->ell) + "," + std::string(1, numerator->which);
    }
};

// Reads text or JSON (detected by a leading '{').
inline PolyFile read_poly(std::istream &is)
{
    std::string content((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw parse_error(1, "empty polynomial file");
    }
    PolyFile out;
    if (content[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(content);
        } catch (const nlohmann::json::parse_error &e) {
            throw parse_error(1, std::string("invalid JSON: ") + e.what());
        }
        try {
            const std::string fmt = j.at("format").get<std::string>();
            const std::uint64_t mod = j.at("mod").is_null() ? 0 : j.at("mod").get<std::uint64_t>();
            if (fmt == "CCR") {
                out.ccr = WeightedPoly{parse_kind(j.at("kind").get<std::string>()), j.at("ell").get<long>(), mod,
                                       detail::json_terms(j.at("monomials"))};
            } else if (fmt == "CCRNUM") {
                const std::string w = j.at("which").get<std::string>();
                if (w != "A" && w != "B") {
                    throw parse_error(1, "which must be A or B");
                }
                out.numerator = NumeratorPoly{w[0], j.at("ell").get<long>(), mod, detail::json_terms(j.at("monomials"))};
            } else {
                throw parse_error(1, "unknown format '" + fmt + "'");
            }
        } catch (const nlohmann::json::exception &e) {
            throw parse_error(1, std::string("malformed JSON polynomial: ") + e.what());
        } catch (const std::invalid_argument &e) {
            throw parse_error(1, e.what());
        }
        return out;
    }
    std::istringstream ts(content);
    std::string header;
    std::getline(ts, header);
    std::istringstream hs(header);
    std::string tag;
    hs >> tag;
    long ell = -1;
    std::uint64_t mod = 0;
    std::optional<Kind> kind;
    char which = 0;
    const auto fields = detail::header_fields(header, tag == "CCRNUM" ? "CCRNUM" : "CCR");
    for (const auto &[k, v] : fields) {
        if (k == "ell") {
            ell = detail::parse_long(v, 1, "ell");
        } else if (k == "mod") {
            mod = static_cast<std::uint64_t>(detail::parse_long(v, 1, "modulus"));
        } else if (k == "kind" && tag == "CCR") {
            try {
                kind = parse_kind(v);
            } catch (const std::invalid_argument &e) {
                throw parse_error(1, e.what());
            }
        } else if (k == "which" && tag == "CCRNUM") {
            if (v != "A" && v != "B") {
                throw parse_error(1, "which must be A or B");
            }
            which = v[0];
        } else {
            throw parse_error(1, "unknown header field '" + k + "'");
        }
    }
    if (ell < 0) {
        throw parse_error(1, "header lacks ell");
    }
    MPoly<BigRat> poly = detail::read_terms(ts, 1);
    if (tag == "CCR") {
        if (!kind) {
            throw parse_error(1, "header lacks kind");
        }
        out.ccr = WeightedPoly{*kind, ell, mod, std::move(poly)};
    } else {
        if (which == 0) {
            throw parse_error(1, "header lacks which");
        }
        out.numerator = NumeratorPoly{which, ell, mod, std::move(poly)};
    }
    return out;
}

inline PolyFile read_poly_string(const std::string &s)
{
    std::istringstream is(s);
    return read_poly(is);
}

// First monomial (in canonical order) where the polynomials differ.
inline std::optional<Monomial> first_difference(const MPoly<BigRat> &a, const MPoly<BigRat> &b)
{
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    const std::greater<Monomial> before;
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && before(ia->first, ib->first))) {
            return ia->first;
        }
        if (ia == a.terms().end() || before(ib->first, ia->first)) {
            return ib->first;
        }
        if (ia->second != ib->second) {
            return ia->first;
        }
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

} // namespace ccr

#endif
