#pragma once

#include <type_traits>
#include <map>
#include <string>
#include <utility>

#include "scalar.hpp"

namespace hopfcomb {

/// Finitely supported linear combination of basis keys with exact scalar
/// coefficients.  Zero coefficients are never stored, and iteration order is
/// the key type's canonical order (keys compare degree-first), so equal
/// elements have identical representations.
template <class Key>
class LinComb {
  public:
    using key_type = Key;
    using map_type = std::map<Key, Scalar>;
    using const_iterator = typename map_type::const_iterator;

    LinComb() = default;

    static LinComb basis(Key k) {
        LinComb e;
        e.add(std::move(k), Scalar(1));
        return e;
    }

    void add(Key k, Scalar c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.try_emplace(std::move(k), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    const_iterator begin() const { return t_.begin(); }
    const_iterator end() const { return t_.end(); }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    Scalar coefficient(const Key& k) const {
        auto it = t_.find(k);
        return it == t_.end() ? Scalar(0) : it->second;
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.t_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.t_) add(k, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

    LinComb operator*(const Scalar& s) const {
        LinComb r;
        if (s.is_zero()) return r;
        for (const auto& [k, c] : t_) r.add(k, c * s);
        return r;
    }
    friend LinComb operator*(const Scalar& s, const LinComb& e) { return e * s; }

    bool operator==(const LinComb& o) const { return t_ == o.t_; }

    /// Apply a key-to-element linear map.
    template <class F>
    auto map_keys(F&& f) const {
        using Out = std::decay_t<decltype(f(std::declval<const Key&>()))>;
        Out r;
        for (const auto& [k, c] : t_) {
            Out img = f(k);
            for (const auto& [k2, c2] : img) r.add(k2, c * c2);
        }
        return r;
    }

    /// Substitute a value for q in every coefficient.
    LinComb eval_q(const Scalar& v) const {
        LinComb r;
        for (const auto& [k, c] : t_) r.add(k, c.eval_q(v));
        return r;
    }

  private:
    map_type t_;
};

/// Element of a two-fold tensor product, indexed by key pairs.
template <class K1, class K2 = K1>
using Tensor2 = LinComb<std::pair<K1, K2>>;

/// Outer (tensor) product of two linear combinations.
template <class K1, class K2>
Tensor2<K1, K2> tensor(const LinComb<K1>& a, const LinComb<K2>& b) {
    Tensor2<K1, K2> r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) r.add({ka, kb}, ca * cb);
    return r;
}

/// Bilinear extension of a key-pair product to whole elements; the functor
/// may return a combination over any key type.
template <class K1, class K2, class Prod>
auto bilinear(const LinComb<K1>& a, const LinComb<K2>& b, Prod&& prod) {
    using Out = std::decay_t<decltype(prod(std::declval<const K1&>(), std::declval<const K2&>()))>;
    Out r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            Out p = prod(ka, kb);
            for (const auto& [k, c] : p) r.add(k, ca * cb * c);
        }
    return r;
}

/// Swap the two tensor legs (for cocommutativity checks).
template <class K>
Tensor2<K> flip(const Tensor2<K>& t) {
    Tensor2<K> r;
    for (const auto& [k, c] : t) r.add({k.second, k.first}, c);
    return r;
}

}  // namespace hopfcomb
