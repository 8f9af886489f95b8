#include "qrook/words.hpp"

namespace qrook {

std::string Gen::name() const {
    std::string s(1, static_cast<char>(kind));
    s += std::to_string(index);
    if (inverse) s += "^-1";
    return s;
}

Element::Element(long c) {
    if (c != 0) terms_.emplace(Word{}, RatFunc(c));
}

Element::Element(const RatFunc& c) {
    if (!c.is_zero()) terms_.emplace(Word{}, c);
}

Element Element::gen(Gen g) { return word({g}); }

Element Element::word(Word w, RatFunc c) {
    Element e;
    if (!c.is_zero()) e.terms_.emplace(std::move(w), std::move(c));
    return e;
}

std::set<Gen> Element::generators() const {
    std::set<Gen> out;
    for (const auto& [w, c] : terms_) out.insert(w.begin(), w.end());
    return out;
}

void Element::add_term(const Word& w, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    Element out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

Element& Element::operator*=(const Element& o) { return *this = *this * o; }

Element& Element::operator*=(const RatFunc& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
}

Element Element::operator-() const {
    Element e = *this;
    for (auto& [w, x] : e.terms_) x = -x;
    return e;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        for (const auto& g : w) out += "*" + g.name();
    }
    return out;
}

Element conjugate_down(const Element& x, int i) {
    Element left(1), right(1);
    for (int j = i - 1; j >= 1; --j) left *= T(j);
    for (int j = 1; j <= i - 1; ++j) right *= T(j);
    return left * x * right;
}

Element substitute(const Element& e, const Substitution& s) {
    std::map<Gen, const Element*> images;
    for (const auto& [g, img] : s) images[g] = &img;
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Element term(c);
        for (const auto& g : w) {
            auto it = images.find(g);
            term *= it == images.end() ? Element::gen(g) : *it->second;
        }
        out += term;
    }
    return out;
}

Element substitute_fully(const Element& e, const Substitution& s) {
    std::set<Gen> defined;
    for (const auto& [g, img] : s) defined.insert(g);
    Element cur = e;
    for (std::size_t guard = 0; guard <= s.size() + 1; ++guard) {
        bool pending = false;
        for (const auto& g : cur.generators()) pending = pending || defined.count(g) > 0;
        if (!pending) return cur;
        cur = substitute(cur, s);
    }
    throw InvalidArgument("substitute_fully: substitution does not terminate");
}

Assignment<Rational> specialize(const Assignment<RatFunc>& a, const Rational& q0) {
    Assignment<Rational> out;
    for (const auto& [g, m] : a) out.emplace(g, specialize(m, q0));
    return out;
}

}  // namespace qrook
