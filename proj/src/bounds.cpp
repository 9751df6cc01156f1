#include "sclab/bounds.hpp"

#include <stdexcept>

namespace sclab {
namespace {

Count pow2(Count e) {
    if (e >= 63) {
        throw std::overflow_error("2^" + std::to_string(e) + " does not fit in 64 bits");
    }
    return Count{1} << e;
}

Count mul(Count a, Count b) {
    Count r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("bound value does not fit in 64 bits");
    }
    return r;
}

Count add(Count a, Count b) {
    Count r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("bound value does not fit in 64 bits");
    }
    return r;
}

void require_standard(const BoolOp& op) {
    if (op.kind() == BoolOp::Kind::Custom) {
        throw std::invalid_argument("closed forms are only known for or, and, xor");
    }
}

}  // namespace

Count sc_cat(Count m, Count n) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument("sc_cat requires m, n >= 1");
    }
    return add(mul(m - 1, pow2(n)), pow2(n - 1));
}

Count sc_cat_kfinal(Count m, Count k, Count n) {
    if (n < 1) {
        throw std::invalid_argument("sc_cat_kfinal requires n >= 1");
    }
    if (k > m) {
        throw std::invalid_argument("sc_cat_kfinal requires k <= m");
    }
    return mul(m, pow2(n)) - mul(k, pow2(n - 1));
}

Count union_tableau_count(Count n, Count p) {
    if (n < 1 || p < 1) {
        throw std::invalid_argument("tableau dimensions must be positive");
    }
    return add(mul(pow2(n) - 1, pow2(p) - 1), 1);
}

Count union_tableau_count_with_origin(Count n, Count p) {
    if (n < 1 || p < 1) {
        throw std::invalid_argument("tableau dimensions must be positive");
    }
    return mul(pow2(n - 1), pow2(p - 1));
}

Count final_pair_count(const BoolOp& op, const Dfa& a, const Dfa& b) {
    Count count = 0;
    for (State p = 0; p < a.state_count(); ++p) {
        for (State q = 0; q < b.state_count(); ++q) {
            count += op.apply(a.is_final(p), b.is_final(q)) ? 1 : 0;
        }
    }
    return count;
}

Count final_pair_count(const BoolOp& op, Count m, Count n) {
    require_standard(op);
    switch (op.kind()) {
        case BoolOp::Kind::Intersection: return 1;
        case BoolOp::Kind::Union: return m + n - 1;
        case BoolOp::Kind::SymDiff: return m + n - 2;
        case BoolOp::Kind::Custom: break;
    }
    throw std::logic_error("unreachable op kind");
}

Count cat_of_union_alternative(Count m, Count n, Count p) {
    return add(mul(m - 1, pow2(n + p)), pow2(n + p - 2));
}

Bound bound(const BoundQuery& q) {
    if (q.m < 3 || q.n < 3 || q.p < 3) {
        throw std::invalid_argument("bounds are stated for m, n, p >= 3");
    }
    if (q.ops.size() != shape_op_count(q.shape)) {
        throw std::invalid_argument(std::string(shape_name(q.shape)) + " takes " +
                                    std::to_string(shape_op_count(q.shape)) +
                                    " boolean operation(s)");
    }
    for (const BoolOp& op : q.ops) {
        require_standard(op);
    }
    const Count m = q.m;
    const Count n = q.n;
    const Count p = q.p;
    Bound b;
    switch (q.shape) {
        case Shape::DoubleCat:
            b.kind = Bound::Kind::NoClosedForm;
            b.formula = "no closed form";
            return b;
        case Shape::BoolBool:
            b.kind = Bound::Kind::Exact;
            b.value = mul(mul(m, n), p);
            b.formula = "m*n*p";
            return b;
        case Shape::CatOfBool:
            switch (q.ops[0].kind()) {
                case BoolOp::Kind::Intersection:
                    b.kind = Bound::Kind::Exact;
                    b.value = sc_cat(m, mul(n, p));
                    b.formula = "(m-1)*2^(n*p) + 2^(n*p-1)";
                    return b;
                case BoolOp::Kind::Union:
                    b.kind = Bound::Kind::Exact;
                    b.value = add(mul(m - 1, union_tableau_count(n, p)),
                                  union_tableau_count_with_origin(n, p));
                    b.formula = "(m-1)*(2^(n+p) - 2^n - 2^p + 2) + 2^(n+p-2)";
                    return b;
                default:
                    b.kind = Bound::Kind::UpperBoundOnly;
                    b.value = sc_cat(m, mul(n, p));
                    b.formula = "<= (m-1)*2^(n*p) + 2^(n*p-1) (upper bound only)";
                    return b;
            }
        case Shape::BoolThenCat: {
            const Count k = final_pair_count(q.ops[0], m, n);
            b.kind = Bound::Kind::Exact;
            b.value = sc_cat_kfinal(mul(m, n), k, p);
            const char* kf = q.ops[0].kind() == BoolOp::Kind::Intersection ? "1"
                             : q.ops[0].kind() == BoolOp::Kind::Union      ? "m+n-1"
                                                                           : "m+n-2";
            b.formula = std::string("m*n*2^p - k*2^(p-1), k = ") + kf;
            return b;
        }
        case Shape::CatThenBool:
            b.kind = Bound::Kind::Exact;
            b.value = mul(sc_cat(m, n), p);
            b.formula = "((m-1)*2^n + 2^(n-1))*p";
            return b;
    }
    throw std::logic_error("unreachable shape");
}

}  // namespace sclab
