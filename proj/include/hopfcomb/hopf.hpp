#pragma once
// Generic graded-bialgebra utilities: linear extension of products and
// coproducts, convolution powers, and the Eulerian idempotent (convolution
// logarithm of the identity) used to project onto primitives.

#include <utility>

#include <hopfcomb/linear.hpp>
#include <hopfcomb/scalar.hpp>

namespace hopfcomb {

/// Extend a basis-level product bilinearly to elements.
template <class Key, class Prod>
auto multiply_elements(const LinComb<Key>& a, const LinComb<Key>& b, Prod&& product) {
    return bilinear(a, b, product);
}

/// Extend a basis-level coproduct linearly to elements.
template <class Key, class Coprod>
Tensor2<Key> coproduct_linear(const LinComb<Key>& x, Coprod&& coproduct) {
    Tensor2<Key> out;
    for (const auto& [k, c] : x) out += coproduct(k) * c;
    return out;
}

namespace detail {

/// J^{*k} applied to a single basis key, where J = Id - unit.counit kills
/// degree-0 components. Recursive over the coproduct; budgets are tiny.
template <class Key, class Prod, class Coprod>
LinComb<Key> convolution_power_J(int k, const Key& key, Prod&& product, Coprod&& coproduct) {
    LinComb<Key> out;
    if (k <= 1) {
        if (key.degree() >= 1) out.add(key, Scalar(1));
        return out;
    }
    for (const auto& [pair, c] : coproduct(key)) {
        if (pair.second.degree() < 1) continue;  // J kills the right leg
        const LinComb<Key> left =
            convolution_power_J(k - 1, pair.first, product, coproduct);
        for (const auto& [lk, lc] : left) {
            out += product(lk, pair.second) * (lc * c);
        }
    }
    return out;
}

}  // namespace detail

/// Eulerian idempotent pi_1 = sum_{k>=1} (-1)^{k-1}/k (Id - unit.counit)^{*k}
/// applied to a homogeneous element of degree n >= 1 (the series truncates at
/// k = n). Throws StructureError on a degree-0 component.
template <class Key, class Prod, class Coprod>
LinComb<Key> convolution_log_project(const LinComb<Key>& x, Prod&& product, Coprod&& coproduct) {
    int n = -1;
    for (const auto& [k, c] : x) {
        if (k.degree() == 0) throw StructureError("not in augmentation ideal");
        if (n < 0) n = k.degree();
        else if (k.degree() != n)
            throw StructureError("convolution_log_project: input is not homogeneous");
    }
    LinComb<Key> out;
    if (x.is_zero()) return out;
    for (int k = 1; k <= n; ++k) {
        Scalar coeff = Scalar::rational(k % 2 == 1 ? 1 : -1, k);
        for (const auto& [key, c] : x) {
            out += detail::convolution_power_J(k, key, product, coproduct) * (coeff * c);
        }
    }
    return out;
}

/// True when Delta(x) = x (x) 1 + 1 (x) x for the given coproduct.
template <class Key, class Coprod>
bool is_primitive(const LinComb<Key>& x, Coprod&& coproduct) {
    Tensor2<Key> expected;
    for (const auto& [k, c] : x) {
        expected.add({k, Key{}}, c);
        expected.add({Key{}, k}, c);
    }
    return coproduct_linear(x, coproduct) == expected;
}

}  // namespace hopfcomb
