#pragma once

#include "confpair/common.hpp"

#include <map>
#include <utility>

namespace confpair {

// Finitely supported integer combination of basis elements. Zero
// coefficients are never stored.
template <class B>
class LinCombo {
public:
    using map_type = std::map<B, Coeff>;

    LinCombo() = default;
    explicit LinCombo(const B& b, const Coeff& c = 1) { add(b, c); }

    void add(const B& b, const Coeff& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinCombo& operator+=(const LinCombo& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    LinCombo& operator-=(const LinCombo& o) {
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    LinCombo& operator*=(const Coeff& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= s;
        return *this;
    }
    friend LinCombo operator+(LinCombo a, const LinCombo& b) { return a += b; }
    friend LinCombo operator-(LinCombo a, const LinCombo& b) { return a -= b; }
    friend LinCombo operator*(const Coeff& s, LinCombo a) { return a *= s; }

    Coeff coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    friend bool operator==(const LinCombo&, const LinCombo&) = default;

private:
    map_type terms_;
};

} // namespace confpair
