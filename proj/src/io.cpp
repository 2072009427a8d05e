#include "pfaffine/io.hpp"

#include <sstream>
#include <stdexcept>

namespace pfaffine {

namespace {

std::string rat_str(const Rat& r)
{
    return r.get_str();
}

// "3", "-1/2", "K", "2*K^2", "1 - 2*K", ...
std::string scalar_body(const Scalar& s)
{
    if (s.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= s.degree(); ++d) {
        const Rat& c = s.coeff(d);
        if (c == 0)
            continue;
        Rat a = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (d == 0) {
            os << rat_str(a);
        } else {
            if (a != 1)
                os << rat_str(a) << "*";
            os << "K";
            if (d > 1)
                os << "^" << d;
        }
    }
    return os.str();
}

int scalar_monomial_count(const Scalar& s)
{
    int c = 0;
    for (int d = 0; d <= s.degree(); ++d)
        if (s.coeff(d) != 0)
            ++c;
    return c;
}

// Renders one "coeff * factors" term; `body` may be empty (identity word).
// Returns the string without a leading sign, and reports the sign separately
// so sums can render "a - b".
struct TermText {
    bool negative = false;
    std::string text;
};

TermText render_term(const Scalar& c, const std::string& body)
{
    TermText t;
    const bool plain = c.is_rational();
    if (body.empty()) {
        if (plain && c.coeff(0) < 0) {
            t.negative = true;
            t.text = rat_str(-c.coeff(0));
        } else if (plain) {
            t.text = rat_str(c.coeff(0));
        } else {
            t.text = scalar_monomial_count(c) > 1 ? "(" + scalar_body(c) + ")" : scalar_body(c);
        }
        return t;
    }
    if (plain) {
        Rat v = c.coeff(0);
        if (v < 0) {
            t.negative = true;
            v = -v;
        }
        t.text = (v == 1) ? body : rat_str(v) + " * " + body;
    } else if (scalar_monomial_count(c) == 1) {
        std::string s = scalar_body(c);
        if (!s.empty() && s[0] == '-') {
            t.negative = true;
            s = s.substr(1);
        }
        t.text = s + " * " + body;
    } else {
        t.text = "(" + scalar_body(c) + ") * " + body;
    }
    return t;
}

std::string join_terms(const std::vector<TermText>& terms)
{
    if (terms.empty())
        return "0";
    std::ostringstream os;
    for (size_t k = 0; k < terms.size(); ++k) {
        if (k == 0)
            os << (terms[k].negative ? "-" : "") << terms[k].text;
        else
            os << (terms[k].negative ? " - " : " + ") << terms[k].text;
    }
    return os.str();
}

std::string word_str(const Word& w)
{
    std::ostringstream os;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k > 0)
            os << " * ";
        os << to_string(w[k]);
    }
    return os.str();
}

std::string ext_str(ExtMono m, int n)
{
    if (m == 0)
        return "1";
    std::ostringstream os;
    bool first = true;
    for (int idx : ext_indices(m, n)) {
        if (!first)
            os << "^";
        os << "e[" << idx << "]";
        first = false;
    }
    return os.str();
}

} // namespace

std::string to_string(const Scalar& s)
{
    return scalar_body(s);
}

std::string to_string(const Gen& g)
{
    if (g.is_tau())
        return "Tau";
    std::ostringstream os;
    os << "F[" << g.i << "," << g.j << "][" << g.r << "]";
    return os.str();
}

std::string to_string(const UPoly& p)
{
    std::vector<TermText> terms;
    for (auto& [w, c] : p.terms())
        terms.push_back(render_term(c, word_str(w)));
    return join_terms(terms);
}

std::string to_string(const Form& f, int n)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, p] : f.terms()) {
        if (!first)
            os << " + ";
        os << ext_str(m, n) << " ⊗ (" << to_string(p) << ")";
        first = false;
    }
    return os.str();
}

std::string to_string(const CartanPoly& p)
{
    std::vector<TermText> terms;
    for (auto& [w, c] : p.terms()) {
        std::ostringstream os;
        for (size_t k = 0; k < w.size(); ++k) {
            if (k > 0)
                os << " * ";
            os << "mu[" << w[k].first << "][" << w[k].second << "]";
        }
        terms.push_back(render_term(Scalar(c), os.str()));
    }
    return join_terms(terms);
}

std::string to_string(const ClassicalPoly& p)
{
    std::vector<TermText> terms;
    for (auto& [zdeg, q] : p.terms()) {
        for (auto& [w, c] : q.terms()) {
            std::ostringstream os;
            for (size_t k = 0; k < w.size(); ++k) {
                if (k > 0)
                    os << " * ";
                os << "F[" << w[k].i << "," << w[k].j << "]";
            }
            if (zdeg != 0) {
                if (!w.empty())
                    os << " * ";
                os << "z^" << zdeg;
            }
            terms.push_back(render_term(c, os.str()));
        }
    }
    return join_terms(terms);
}

std::string to_string(const ClassicalForm& f, int n)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, p] : f.terms()) {
        if (!first)
            os << " + ";
        os << ext_str(m, n) << " ⊗ (" << to_string(p) << ")";
        first = false;
    }
    return os.str();
}

namespace {

nlohmann::json word_json(const Word& w)
{
    nlohmann::json jw = nlohmann::json::array();
    for (const Gen& g : w) {
        if (g.is_tau())
            jw.push_back(nlohmann::json::array({"Tau"}));
        else
            jw.push_back(nlohmann::json::array({"F", g.i, g.j, g.r}));
    }
    return jw;
}

void emit_terms(const Word& w, const Scalar& c, nlohmann::json& terms,
                const std::vector<int>* ext)
{
    for (int d = 0; d <= c.degree(); ++d) {
        if (c.coeff(d) == 0)
            continue;
        nlohmann::json t;
        t["coeff"] = c.coeff(d).get_str();
        t["K_degree"] = d;
        t["word"] = word_json(w);
        if (ext)
            t["ext"] = *ext;
        terms.push_back(std::move(t));
    }
}

Word word_from_json(const nlohmann::json& jw)
{
    Word w;
    for (const auto& atom : jw) {
        const std::string kind = atom.at(0).get<std::string>();
        if (kind == "Tau") {
            w.push_back(Gen::tau());
        } else if (kind == "F") {
            CanonF c = canonicalize(atom.at(1).get<int>(), atom.at(2).get<int>(),
                                    atom.at(3).get<int>());
            if (c.sign != 1)
                throw std::invalid_argument("word_from_json: non-canonical F letter");
            w.push_back(c.g);
        } else {
            throw std::invalid_argument("word_from_json: unknown letter kind");
        }
    }
    return w;
}

Scalar coeff_from_json(const nlohmann::json& t)
{
    Rat c(t.at("coeff").get<std::string>());
    c.canonicalize();
    const int d = t.at("K_degree").get<int>();
    return Scalar::K(d, c);
}

} // namespace

nlohmann::json to_json(const UPoly& p, int n)
{
    nlohmann::json j;
    j["n"] = n;
    j["terms"] = nlohmann::json::array();
    for (auto& [w, c] : p.terms())
        emit_terms(w, c, j["terms"], nullptr);
    return j;
}

nlohmann::json to_json(const Form& f, int n)
{
    nlohmann::json j;
    j["n"] = n;
    j["terms"] = nlohmann::json::array();
    for (auto& [m, p] : f.terms()) {
        const std::vector<int> ext = ext_indices(m, n);
        for (auto& [w, c] : p.terms())
            emit_terms(w, c, j["terms"], &ext);
    }
    return j;
}

UPoly upoly_from_json(const nlohmann::json& j)
{
    UPoly p;
    for (const auto& t : j.at("terms"))
        p.add_term(word_from_json(t.at("word")), coeff_from_json(t));
    return p;
}

Form form_from_json(const nlohmann::json& j)
{
    const int n = j.at("n").get<int>();
    Form f;
    for (const auto& t : j.at("terms")) {
        ExtMono m = 0;
        if (t.contains("ext"))
            for (int idx : t.at("ext").get<std::vector<int>>())
                m |= ExtMono(1) << ext_bit(idx, n);
        f.add_term(m, UPoly::from_word(word_from_json(t.at("word")), coeff_from_json(t)));
    }
    return f;
}

nlohmann::json to_json(const CartanPoly& p, int n)
{
    nlohmann::json j;
    j["n"] = n;
    j["terms"] = nlohmann::json::array();
    for (auto& [w, c] : p.terms()) {
        nlohmann::json t;
        t["coeff"] = c.get_str();
        t["K_degree"] = 0;
        nlohmann::json jw = nlohmann::json::array();
        for (auto& [i, r] : w)
            jw.push_back(nlohmann::json::array({"Mu", i, r}));
        t["word"] = std::move(jw);
        j["terms"].push_back(std::move(t));
    }
    return j;
}

nlohmann::json to_json(const ClassicalForm& f, int n)
{
    nlohmann::json j;
    j["n"] = n;
    j["terms"] = nlohmann::json::array();
    for (auto& [m, p] : f.terms()) {
        const std::vector<int> ext = ext_indices(m, n);
        for (auto& [zdeg, q] : p.terms()) {
            for (auto& [w, c] : q.terms()) {
                nlohmann::json t;
                t["coeff"] = c.coeff(0).get_str();
                t["z_degree"] = zdeg;
                nlohmann::json jw = nlohmann::json::array();
                for (const Gen& g : w)
                    jw.push_back(nlohmann::json::array({"F", g.i, g.j}));
                t["word"] = std::move(jw);
                t["ext"] = ext;
                j["terms"].push_back(std::move(t));
            }
        }
    }
    return j;
}

} // namespace pfaffine
