#include "coulomb/series.hpp"

#include <algorithm>
#include <sstream>

namespace coulomb {

namespace {

void check_same_rank(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.x_rank() != b.x_rank())
        throw StructuralError(std::string(op) + ": x-rank mismatch (" +
                              std::to_string(a.x_rank()) + " vs " + std::to_string(b.x_rank()) + ")");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int x_rank, int64_t order) : x_rank_(x_rank), order_(order) {
    if (x_rank < 0) throw StructuralError("TruncatedSeries: negative x-rank");
    if (order <= 0) throw StructuralError("TruncatedSeries: order must be positive");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int x_rank, int64_t order) {
    return monomial(c, BiDegree{0, std::vector<int64_t>(x_rank, 0)}, x_rank, order);
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, BiDegree deg, int x_rank,
                                          int64_t order) {
    TruncatedSeries s(x_rank, order);
    s.add_term(deg, c);
    return s;
}

Rational TruncatedSeries::coeff(const BiDegree& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Rational() : it->second;
}

void TruncatedSeries::add_term(const BiDegree& d, const Rational& c) {
    if (static_cast<int>(d.x.size()) != x_rank_)
        throw StructuralError("add_term: exponent vector length != x-rank");
    if (d.t < 0) throw StructuralError("add_term: negative t-degree");
    if (c.is_zero() || d.t >= order_) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::add(const TruncatedSeries& other) const {
    check_same_rank(*this, other, "series_add");
    TruncatedSeries out(x_rank_, std::min(order_, other.order_));
    for (const auto& [d, c] : terms_) out.add_term(d, c);
    for (const auto& [d, c] : other.terms_) out.add_term(d, c);
    return out;
}

TruncatedSeries TruncatedSeries::sub(const TruncatedSeries& other) const {
    return add(other.scaled(Rational(-1)));
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& other) const {
    check_same_rank(*this, other, "series_mul");
    TruncatedSeries out(x_rank_, std::min(order_, other.order_));
    for (const auto& [da, ca] : terms_) {
        if (da.t >= out.order_) break;  // map is t-ordered
        for (const auto& [db, cb] : other.terms_) {
            if (da.t + db.t >= out.order_) continue;
            BiDegree d{da.t + db.t, da.x};
            for (int i = 0; i < x_rank_; ++i) d.x[i] += db.x[i];
            out.add_term(d, ca * cb);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries out(x_rank_, order_);
    if (c.is_zero()) return out;
    for (const auto& [d, v] : terms_) out.terms_.emplace(d, v * c);
    return out;
}

TruncatedSeries TruncatedSeries::truncated(int64_t new_order) const {
    if (new_order >= order_) return *this;
    TruncatedSeries out(x_rank_, new_order);
    for (const auto& [d, c] : terms_) {
        if (d.t >= new_order) break;
        out.terms_.emplace(d, c);
    }
    return out;
}

TruncatedSeries TruncatedSeries::regrade_x(const std::vector<std::vector<int64_t>>& matrix) const {
    const int new_rank = static_cast<int>(matrix.size());
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != x_rank_)
            throw StructuralError("regrade_x: matrix column count != x-rank");
    TruncatedSeries out(new_rank, order_);
    for (const auto& [d, c] : terms_) {
        BiDegree nd{d.t, std::vector<int64_t>(new_rank, 0)};
        for (int i = 0; i < new_rank; ++i)
            for (int j = 0; j < x_rank_; ++j) nd.x[i] += matrix[i][j] * d.x[j];
        out.add_term(nd, c);
    }
    return out;
}

TruncatedSeries TruncatedSeries::collapsed_x() const { return regrade_x({}); }

bool series_equal_upto(const TruncatedSeries& a, const TruncatedSeries& b, int64_t order) {
    check_same_rank(a, b, "series_equal_upto");
    const int64_t bound = std::min({order, a.order(), b.order()});
    for (const auto& [d, c] : a.terms()) {
        if (d.t >= bound) break;
        if (b.coeff(d) != c) return false;
    }
    for (const auto& [d, c] : b.terms()) {
        if (d.t >= bound) break;
        if (a.coeff(d) != c) return false;
    }
    return true;
}

TruncatedSeries geom_expand(int64_t t_step, const std::vector<int64_t>& x_shift, int64_t order) {
    if (t_step <= 0)
        throw ConvergenceError("geom_expand: t_step must be >= 1 for t-adic convergence");
    const int rank = static_cast<int>(x_shift.size());
    TruncatedSeries out(rank, order);
    BiDegree d{0, std::vector<int64_t>(rank, 0)};
    for (int64_t k = 0; k * t_step < order; ++k) {
        d.t = k * t_step;
        for (int i = 0; i < rank; ++i) d.x[i] = k * x_shift[i];
        out.add_term(d, Rational(1));
    }
    return out;
}

namespace {

// One monomial "x^2*x2^-1*t^3"; empty when everything is trivial.
std::string monomial_str(const BiDegree& d, int x_rank) {
    std::ostringstream os;
    bool first = true;
    auto factor = [&](const std::string& name, int64_t e) {
        if (e == 0) return;
        if (!first) os << "*";
        first = false;
        os << name;
        if (e != 1) os << "^" << e;
    };
    for (int i = 0; i < x_rank; ++i)
        factor(x_rank == 1 ? "x" : "x" + std::to_string(i + 1), d.x[i]);
    factor("t", d.t);
    return os.str();
}

}  // namespace

std::string TruncatedSeries::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<BiDegree, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.first.t != b.first.t) return a.first.t < b.first.t;
        return a.first.x > b.first.x;  // descending x within a t-degree
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : ordered) {
        Rational abs = c.is_negative() ? -c : c;
        if (first) {
            if (c.is_negative()) os << "-";
            first = false;
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        std::string mono = monomial_str(d, x_rank_);
        if (mono.empty())
            os << abs.str();
        else if (abs.is_one())
            os << mono;
        else
            os << abs.str() << "*" << mono;
    }
    return os.str();
}

}  // namespace coulomb
