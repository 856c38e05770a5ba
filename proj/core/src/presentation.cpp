#include "pslab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <fstream>
#include <set>
#include <sstream>

#include "pslab/config.hpp"
#include "pslab/errors.hpp"

namespace pslab {

FreePolynomial FreePolynomial::monomial(FreeWord w, Rational c) {
    FreePolynomial p;
    p.add_term(w, c);
    return p;
}

void FreePolynomial::add_term(const FreeWord& w, const Rational& c) {
    if (pslab::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (pslab::is_zero(it->second)) terms_.erase(it);
    }
}

FreePolynomial& FreePolynomial::operator+=(const FreePolynomial& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

FreePolynomial& FreePolynomial::operator-=(const FreePolynomial& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

FreePolynomial FreePolynomial::operator*(const Rational& c) const {
    FreePolynomial out;
    if (pslab::is_zero(c)) return out;
    for (const auto& [w, coeff] : terms_) out.terms_.emplace(w, coeff * c);
    return out;
}

FreePolynomial FreePolynomial::operator-() const { return *this * Rational(-1); }

FreePolynomial FreePolynomial::sandwich(const FreeWord& left, const FreeWord& right) const {
    FreePolynomial out;
    for (const auto& [w, c] : terms_) {
        FreeWord prod;
        prod.reserve(left.size() + w.size() + right.size());
        prod.insert(prod.end(), left.begin(), left.end());
        prod.insert(prod.end(), w.begin(), w.end());
        prod.insert(prod.end(), right.begin(), right.end());
        out.add_term(prod, c);
    }
    return out;
}

bool FreePolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    size_t d = terms_.begin()->first.size();
    for (const auto& [w, c] : terms_)
        if (w.size() != d) return false;
    return true;
}

int FreePolynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.size());
}

int AlgebraPresentation::generator_index(const std::string& gname) const {
    for (const auto& g : generators)
        if (g.name == gname) return g.index;
    return -1;
}

int AlgebraPresentation::min_relation_degree() const {
    int m = INT_MAX;
    for (const auto& r : relations) m = std::min(m, r.degree());
    return m;
}

std::vector<int> AlgebraPresentation::relation_degrees() const {
    std::vector<int> out;
    out.reserve(relations.size());
    for (const auto& r : relations) out.push_back(r.degree());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// The relation grammar:
//   expr     := ["-"] term (("+"|"-") term)*
//   term     := rational ["*" word] | word
//   word     := factor ("*" factor)*
//   factor   := generator ["^" positive-integer]
//   rational := ["-"] integer ["/" positive-integer]
// Multiplication is noncommutative and always explicit.
struct ExprParser {
    const std::string& text;
    const std::vector<std::string>& symbols;
    size_t pos = 0;

    int column() const { return static_cast<int>(pos) + 1; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, column()); }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Integer read_integer() {
        skip_ws();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits.push_back(text[pos++]);
        if (digits.empty()) fail("expected integer");
        return Integer(digits);
    }

    std::string read_ident() {
        skip_ws();
        if (pos >= text.size() ||
            !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            fail("expected generator name");
        std::string out;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            out.push_back(text[pos++]);
        return out;
    }

    int read_generator() {
        int col = column();
        std::string name = read_ident();
        for (size_t i = 0; i < symbols.size(); ++i)
            if (symbols[i] == name) return static_cast<int>(i);
        throw ParseError("unknown generator '" + name + "'", 1, col);
    }

    // factor := generator ["^" posint]; appends letters to `word`.
    void read_factor(FreeWord& word) {
        int g = read_generator();
        long e = 1;
        if (accept('^')) {
            Integer n = read_integer();
            if (sgn(n) <= 0 || !n.fits_slong_p()) fail("exponent must be a positive integer");
            e = n.get_si();
            if (e > 4096) fail("exponent too large");
        }
        for (long i = 0; i < e; ++i) word.push_back(g);
    }

    Rational read_rational() {
        Integer num = read_integer();
        if (accept('/')) {
            Integer den = read_integer();
            if (sgn(den) <= 0) fail("denominator must be positive");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    // term := rational ["*" word] | word
    FreePolynomial read_term() {
        skip_ws();
        Rational coeff(1);
        bool have_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = read_rational();
            have_coeff = true;
            if (!accept('*')) return FreePolynomial::monomial({}, coeff);
        }
        FreeWord word;
        read_factor(word);
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                read_factor(word);
            } else {
                break;
            }
        }
        (void)have_coeff;
        return FreePolynomial::monomial(word, coeff);
    }

    FreePolynomial parse() {
        FreePolynomial out;
        bool negate = accept('-');
        out += read_term() * Rational(negate ? -1 : 1);
        while (!eof()) {
            if (accept('+')) {
                out += read_term();
            } else if (accept('-')) {
                out -= read_term();
            } else {
                fail("expected '+' or '-'");
            }
        }
        return out;
    }
};

std::vector<std::string> generator_names(const AlgebraPresentation& pres) {
    std::vector<std::string> names;
    names.reserve(pres.generators.size());
    for (const auto& g : pres.generators) names.push_back(g.name);
    return names;
}

} // namespace

FreePolynomial parse_expression(const std::string& text, const std::vector<std::string>& symbols) {
    ExprParser parser{text, symbols};
    return parser.parse();
}

AlgebraPresentation parse_presentation(const std::string& text) {
    ConfigDoc doc = parse_config(text);
    const ConfigTable* alg = doc.table("algebra");
    if (!alg) throw InputError("algebra spec file needs an [algebra] table");

    AlgebraPresentation pres;
    pres.name = alg->has("name") ? alg->get_string("name") : "unnamed";
    std::vector<std::string> names = alg->get_strings("generators");
    if (names.empty()) throw InputError("at least one generator is required");
    std::set<std::string> seen;
    for (size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty() || !(std::isalpha(static_cast<unsigned char>(names[i][0])) ||
                                  names[i][0] == '_'))
            throw InputError("invalid generator name '" + names[i] + "'");
        if (!seen.insert(names[i]).second)
            throw InputError("duplicate generator name '" + names[i] + "'");
        pres.generators.push_back({names[i], static_cast<int>(i)});
    }
    if (alg->has("char_not"))
        for (auto p : alg->get_ints("char_not"))
            pres.characteristic_exclusions.push_back(static_cast<int>(p));

    if (const auto* rels = doc.array("relations")) {
        for (const auto& rel : *rels) {
            std::string expr = rel.get_string("expr");
            FreePolynomial p = parse_expression(expr, names);
            if (p.is_zero()) throw InputError("relation '" + expr + "' is identically zero");
            if (!p.is_homogeneous())
                throw InputError("relation '" + expr + "' is not homogeneous");
            if (p.degree() < 2)
                throw InputError("relation '" + expr + "' has degree < 2; generators live in degree 1");
            pres.relations.push_back(std::move(p));
        }
    }
    return pres;
}

AlgebraPresentation parse_presentation_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open algebra file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

std::string print_free_word(const FreeWord& w, const AlgebraPresentation& pres) {
    if (w.empty()) return "1";
    std::string out;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += "*";
        out += pres.generator_name(w[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string print_free_polynomial(const FreePolynomial& p, const AlgebraPresentation& pres) {
    if (p.is_zero()) return "0";
    // Descending canonical order reads naturally (leading term first).
    std::vector<std::pair<FreeWord, Rational>> terms(p.terms().begin(), p.terms().end());
    std::reverse(terms.begin(), terms.end());
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += sgn(a) < 0 ? " - " : " + ";
            if (sgn(a) < 0) a = -a;
        }
        std::string word = print_free_word(w, pres);
        if (a != 1 || word == "1") {
            out += to_string(a);
            if (word != "1") out += "*" + word;
        } else {
            out += word;
        }
        first = false;
    }
    return out;
}

std::string print_presentation(const AlgebraPresentation& pres) {
    std::ostringstream out;
    out << "[algebra]\n";
    out << "name = \"" << pres.name << "\"\n";
    out << "generators = [";
    for (size_t i = 0; i < pres.generators.size(); ++i) {
        if (i) out << ", ";
        out << '"' << pres.generators[i].name << '"';
    }
    out << "]\n";
    if (!pres.characteristic_exclusions.empty()) {
        out << "char_not = [";
        for (size_t i = 0; i < pres.characteristic_exclusions.size(); ++i) {
            if (i) out << ", ";
            out << pres.characteristic_exclusions[i];
        }
        out << "]\n";
    }
    for (const auto& r : pres.relations) {
        out << "\n[[relations]]\n";
        out << "expr = \"" << print_free_polynomial(r, pres) << "\"\n";
    }
    return out.str();
}

} // namespace pslab
