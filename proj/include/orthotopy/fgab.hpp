#pragma once

#include <cstddef>
#include <iterator>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "intmat.hpp"
#include "snf.hpp"

namespace orthotopy {

// Finitely generated abelian group, stored as an ordered list of summand
// orders: 0 encodes a Z summand, k >= 2 encodes Z/k. Order-1 summands are
// dropped on construction. The list is positional and is never re-sorted;
// Z/2 + Z and Z + Z/2 are distinct presentations of isomorphic groups.
class FgAbGroup {
public:
    FgAbGroup() = default;

    explicit FgAbGroup(std::vector<Int> orders) {
        orders_.reserve(orders.size());
        for (auto& o : orders) {
            if (o < 0) {
                std::ostringstream os;
                os << "summand order " << o << " is negative (use 0 for Z, k >= 2 for Z/k)";
                throw InvalidOrderError(os.str());
            }
            if (o == 1) continue;
            orders_.push_back(std::move(o));
        }
    }

    const std::vector<Int>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    const Int& order(std::size_t i) const { return orders_[i]; }

    bool is_trivial() const { return orders_.empty(); }

    bool is_finite() const {
        for (const auto& o : orders_)
            if (o == 0) return false;
        return true;
    }

    bool operator==(const FgAbGroup& o) const { return orders_ == o.orders_; }
    bool operator!=(const FgAbGroup& o) const { return !(*this == o); }

private:
    std::vector<Int> orders_;
};

inline FgAbGroup make_group(std::vector<Int> orders) { return FgAbGroup(std::move(orders)); }

inline FgAbGroup make_group(std::initializer_list<long long> orders) {
    std::vector<Int> v(orders.begin(), orders.end());
    return FgAbGroup(std::move(v));
}

inline FgAbGroup trivial_group() { return FgAbGroup(); }

// Positional concatenation a ++ b.
inline FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> orders = a.orders();
    orders.insert(orders.end(), b.orders().begin(), b.orders().end());
    return FgAbGroup(std::move(orders));
}

// "0" for the trivial group, otherwise summands joined by " + ",
// e.g. "Z + Z/2".
inline std::string to_string(const FgAbGroup& g) {
    if (g.is_trivial()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (i) os << " + ";
        if (g.order(i) == 0)
            os << "Z";
        else
            os << "Z/" << g.order(i);
    }
    return os.str();
}

namespace detail {

// Canonical residue of value mod order; order 0 keeps the value (Z summand).
inline Int reduce_entry(const Int& value, const Int& order) {
    if (order == 0) return value;
    Int r = value % order;
    if (r < 0) r += order;
    return r;
}

} // namespace detail

// Homomorphism between FgAbGroups as an integer matrix: rows indexed by
// target summands, columns by source summands. Well-definedness of entry
// m(j,i) with source order a and target order b means m*a = 0 mod b, where
// "mod 0" is equality in Z; a finite-order source summand therefore cannot
// hit an infinite summand with nonzero coefficient. Entries are stored
// reduced mod the target order of their row.
class GroupHom {
public:
    GroupHom(FgAbGroup source, FgAbGroup target, IntMat matrix)
        : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
        if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank()) {
            std::ostringstream os;
            os << "hom matrix is " << matrix_.rows() << "x" << matrix_.cols()
               << " but target rank is " << target_.rank() << " and source rank is "
               << source_.rank();
            throw ShapeError(os.str());
        }
        for (std::size_t j = 0; j < target_.rank(); ++j)
            for (std::size_t i = 0; i < source_.rank(); ++i) {
                const Int& a = source_.order(i);
                const Int& b = target_.order(j);
                const Int& m = matrix_(j, i);
                const bool ok = (b == 0) ? (m * a == 0) : ((m * a) % b == 0);
                if (!ok) {
                    std::ostringstream os;
                    os << "entry " << m << " at row " << j << ", column " << i
                       << " is ill-defined: source order " << a << ", target order " << b;
                    throw IllDefinedHomError(os.str());
                }
                matrix_(j, i) = detail::reduce_entry(m, b);
            }
    }

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    const IntMat& matrix() const { return matrix_; }

    bool operator==(const GroupHom& o) const {
        return source_ == o.source_ && target_ == o.target_ && matrix_ == o.matrix_;
    }
    bool operator!=(const GroupHom& o) const { return !(*this == o); }

private:
    FgAbGroup source_, target_;
    IntMat matrix_;
};

inline GroupHom make_hom(FgAbGroup source, FgAbGroup target, IntMat matrix) {
    return GroupHom(std::move(source), std::move(target), std::move(matrix));
}

inline GroupHom identity_hom(const FgAbGroup& g) {
    return GroupHom(g, g, IntMat::identity(g.rank()));
}

inline GroupHom zero_hom(const FgAbGroup& source, const FgAbGroup& target) {
    return GroupHom(source, target, IntMat(target.rank(), source.rank()));
}

// g after f. The middle groups must agree as order lists.
inline GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (f.target() != g.source())
        throw CompositionError("compose: target of the first map is " + to_string(f.target()) +
                               " but source of the second is " + to_string(g.source()));
    return GroupHom(f.source(), g.target(), g.matrix() * f.matrix());
}

inline GroupHom hom_add(const GroupHom& a, const GroupHom& b) {
    if (a.source() != b.source() || a.target() != b.target())
        throw CompositionError("hom_add: maps do not share source and target");
    return GroupHom(a.source(), a.target(), a.matrix() + b.matrix());
}

inline GroupHom hom_scale(const Int& k, const GroupHom& f) {
    return GroupHom(f.source(), f.target(), k * f.matrix());
}

// [a | b] on source a.source ++ b.source; targets must agree.
inline GroupHom hom_hstack(const GroupHom& a, const GroupHom& b) {
    if (a.target() != b.target())
        throw CompositionError("hom_hstack: targets disagree");
    return GroupHom(direct_sum(a.source(), b.source()), a.target(), hstack(a.matrix(), b.matrix()));
}

// [a; b] on target a.target ++ b.target; sources must agree.
inline GroupHom hom_vstack(const GroupHom& a, const GroupHom& b) {
    if (a.source() != b.source())
        throw CompositionError("hom_vstack: sources disagree");
    return GroupHom(a.source(), direct_sum(a.target(), b.target()), vstack(a.matrix(), b.matrix()));
}

// Image of a residue tuple.
inline std::vector<Int> apply(const GroupHom& f, const std::vector<Int>& x) {
    if (x.size() != f.source().rank()) throw ShapeError("apply: tuple length is not the source rank");
    std::vector<Int> y(f.target().rank());
    for (std::size_t j = 0; j < y.size(); ++j) {
        Int acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i) acc += f.matrix()(j, i) * x[i];
        y[j] = detail::reduce_entry(acc, f.target().order(j));
    }
    return y;
}

namespace detail {

// Relation matrix of a group: diagonal of summand orders (zero columns for
// Z summands contribute nothing and are harmless).
inline IntMat relation_diagonal(const FgAbGroup& g) {
    IntMat d(g.rank(), g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) d(i, i) = g.order(i);
    return d;
}

} // namespace detail

// Surjectivity: the cokernel of [matrix | target relations] must vanish,
// i.e. all Smith diagonal entries of the augmented matrix are 1.
inline bool is_epimorphism(const GroupHom& f) {
    const std::size_t t = f.target().rank();
    if (t == 0) return true;
    const IntMat aug = hstack(f.matrix(), detail::relation_diagonal(f.target()));
    const SnfResult s = smith_normal_form(aug);
    for (std::size_t i = 0; i < t; ++i)
        if (s.d(i, i) != 1) return false;
    return true;
}

// Injectivity is checked on the lattice level: x in Z^s maps to zero in the
// target iff (x, y) lies in the integer kernel of [matrix | target
// relations]; the map is injective iff every such x already lies in the
// source relation lattice (componentwise divisibility by the source orders,
// with order 0 forcing the component to vanish).
inline bool is_monomorphism(const GroupHom& f) {
    const std::size_t s = f.source().rank();
    const IntMat aug = hstack(f.matrix(), detail::relation_diagonal(f.target()));
    const IntMat ker = kernel_basis(aug);
    for (std::size_t c = 0; c < ker.cols(); ++c)
        for (std::size_t i = 0; i < s; ++i) {
            const Int& oi = f.source().order(i);
            const Int& xi = ker(i, c);
            if (oi == 0 ? xi != 0 : xi % oi != 0) return false;
        }
    return true;
}

inline bool is_isomorphism(const GroupHom& f) {
    return is_epimorphism(f) && is_monomorphism(f);
}

// Lazily enumerates every element of a finite group exactly once as a tuple
// of residues, odometer order. The trivial group yields the empty tuple.
class ElementRange {
public:
    explicit ElementRange(FgAbGroup group) : group_(std::move(group)) {
        if (!group_.is_finite())
            throw NotFiniteError("enumerate_elements: " + to_string(group_) +
                                 " has an infinite summand");
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = std::vector<Int>;
        using difference_type = std::ptrdiff_t;
        using pointer = const value_type*;
        using reference = const value_type&;

        iterator() : group_(nullptr), at_end_(true) {}

        explicit iterator(const FgAbGroup* group)
            : group_(group), current_(group->rank()), at_end_(false) {}

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }

        iterator& operator++() {
            std::size_t i = 0;
            for (; i < current_.size(); ++i) {
                current_[i] += 1;
                if (current_[i] < group_->order(i)) break;
                current_[i] = 0;
            }
            if (i == current_.size()) at_end_ = true;
            return *this;
        }

        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }

        bool operator==(const iterator& o) const {
            if (at_end_ != o.at_end_) return false;
            return at_end_ || current_ == o.current_;
        }
        bool operator!=(const iterator& o) const { return !(*this == o); }

    private:
        const FgAbGroup* group_;
        std::vector<Int> current_;
        bool at_end_;
    };

    iterator begin() const { return iterator(&group_); }
    iterator end() const { return iterator(); }

    const FgAbGroup& group() const { return group_; }

private:
    FgAbGroup group_;
};

inline ElementRange enumerate_elements(FgAbGroup group) { return ElementRange(std::move(group)); }

} // namespace orthotopy
