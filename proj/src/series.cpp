#include "yrk/series.hpp"

namespace yrk {

namespace {
Scalar scalar_int(long n, Backend b) {
    return b == Backend::exact ? Scalar::exact_int(n) : Scalar::flt(static_cast<double>(n));
}
} // namespace

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    int lead = std::max(a.lead_, b.lead_);
    int low = std::max(a.lowest_power(), b.lowest_power());
    int dim = a.dim() ? a.dim() : b.dim();
    Backend bk = a.c_.empty() ? b.backend() : a.backend();
    std::vector<Matrix> c;
    for (int k = lead; k >= low; --k) {
        Matrix m(dim, dim, bk);
        if (k <= a.lead_ && k >= a.lowest_power()) m = m + a.coeff_of_power(k);
        if (k <= b.lead_ && k >= b.lowest_power()) m = m + b.coeff_of_power(k);
        c.push_back(std::move(m));
    }
    return PowerSeries(a.var_.empty() ? b.var_ : a.var_, lead, std::move(c));
}

PowerSeries operator*(const PowerSeries& a_in, const PowerSeries& b_in) {
    // truncation: the result is valid down to the min of (low_a + lead_b, low_b + lead_a)
    PowerSeries a = a_in.compact();
    PowerSeries b = b_in.compact();
    int lead = a.lead_ + b.lead_;
    int low = std::max(a.lowest_power() + b.lead_, b.lowest_power() + a.lead_);
    int dim_rows = a.c_.empty() ? 0 : a.c_.front().rows();
    int dim_cols = b.c_.empty() ? 0 : b.c_.front().cols();
    Backend bk = a.backend();
    std::vector<Matrix> c(static_cast<size_t>(lead - low) + 1, Matrix(dim_rows, dim_cols, bk));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        int pa = a.lead_ - static_cast<int>(i);
        for (size_t j = 0; j < b.c_.size(); ++j) {
            int p = pa + b.lead_ - static_cast<int>(j);
            if (p < low) break;
            if (b.c_[j].is_zero()) continue;
            c[static_cast<size_t>(lead - p)] = c[static_cast<size_t>(lead - p)] + a.c_[i] * b.c_[j];
        }
    }
    return PowerSeries(a.var_, lead, std::move(c));
}

PowerSeries PowerSeries::inverse() const {
    if (lead_ != 0) throw math_domain_error("series inverse requires leading power 0");
    Matrix c0 = c_.front();
    Matrix c0i = c0.inverse();
    int n = static_cast<int>(c_.size());
    std::vector<Matrix> r(c_.size(), Matrix(dim(), dim(), backend()));
    r[0] = c0i;
    for (int k = 1; k < n; ++k) {
        Matrix acc(dim(), dim(), backend());
        for (int j = 1; j <= k; ++j) acc = acc + c_[static_cast<size_t>(j)] * r[static_cast<size_t>(k - j)];
        r[static_cast<size_t>(k)] = -(c0i * acc);
    }
    return PowerSeries(var_, 0, std::move(r));
}

PowerSeries PowerSeries::log() const {
    if (lead_ != 0) throw math_domain_error("series log requires leading power 0");
    Matrix id = Matrix::identity(dim(), backend());
    if (!(c_.front() == id)) throw math_domain_error("series log requires identity leading term");
    PowerSeries x = *this;
    x.c_[0] = Matrix(dim(), dim(), backend()); // x = f - 1, strictly lower order
    PowerSeries acc = x;
    PowerSeries pw = x;
    int terms = static_cast<int>(c_.size());
    for (int k = 2; k < terms + 1; ++k) {
        pw = pw * x;
        pw = pw.truncate_to(terms - 1);
        if (pw.is_zero()) break;
        Scalar coef = scalar_int((k % 2 == 0) ? -1 : 1, backend()) / scalar_int(k, backend());
        acc = acc + coef * pw;
    }
    return acc.truncate_to(terms - 1);
}

PowerSeries PowerSeries::exp() const {
    PowerSeries x = compact();
    if (x.lead_ >= 0 && !x.c_.empty() && !x.is_zero())
        throw math_domain_error("series exp requires strictly negative powers");
    int order = -x.lowest_power();
    PowerSeries acc = PowerSeries::identity(var_, dim(), order, backend());
    PowerSeries pw = acc;
    Scalar fact = scalar_int(1, backend());
    for (int k = 1; k <= order; ++k) {
        pw = (pw * x).truncate_to(order);
        if (pw.is_zero()) break;
        fact = fact * scalar_int(k, backend());
        acc = acc + fact.inverse() * pw;
    }
    return acc;
}

PowerSeries PowerSeries::compact() const {
    size_t drop = 0;
    while (drop + 1 < c_.size() && c_[drop].is_zero()) ++drop;
    if (drop == 0) return *this;
    std::vector<Matrix> c(c_.begin() + static_cast<long>(drop), c_.end());
    return PowerSeries(var_, lead_ - static_cast<int>(drop), std::move(c));
}

PowerSeries PowerSeries::derivative() const {
    std::vector<Matrix> c;
    c.reserve(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) {
        int p = lead_ - static_cast<int>(k);
        c.push_back(scalar_int(p, backend()) * c_[k]);
    }
    return PowerSeries(var_, lead_ - 1, std::move(c));
}

PowerSeries PowerSeries::recenter(const Scalar& c) const {
    // s^p -> (s+c)^p = sum_j binom(p, j) c^j s^(p-j); exact for p >= 0,
    // binomial series truncated at the truncation order for p < 0.
    int low = lowest_power();
    PowerSeries out = PowerSeries(var_, lead_, std::vector<Matrix>(c_.size(), Matrix(dim(), dim(), backend())));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        int p = lead_ - static_cast<int>(k);
        Scalar coef = scalar_int(1, backend());
        Scalar cj = scalar_int(1, backend());
        for (int j = 0; p - j >= low; ++j) {
            if (j > 0) {
                // binom(p, j) = binom(p, j-1) * (p - j + 1) / j
                coef = coef * scalar_int(p - j + 1, backend()) / scalar_int(j, backend());
                cj = cj * c;
                if (p >= 0 && j > p) break;
            }
            Matrix add = (coef * cj) * c_[k];
            size_t idx = static_cast<size_t>(lead_ - (p - j));
            out.c_[idx] = out.c_[idx] + add;
        }
    }
    return out;
}

PowerSeries PowerSeries::scale_arg(const Scalar& c) const {
    PowerSeries out = *this;
    for (size_t k = 0; k < out.c_.size(); ++k) {
        int p = lead_ - static_cast<int>(k);
        Scalar f = scalar_int(1, backend());
        for (int j = 0; j < std::abs(p); ++j) f = f * c;
        if (p < 0) f = f.inverse();
        out.c_[k] = f * out.c_[k];
    }
    return out;
}

PowerSeries PowerSeries::drop_above(int power) const {
    if (power >= lead_) return *this;
    std::vector<Matrix> c(c_.begin() + (lead_ - power), c_.end());
    return PowerSeries(var_, power, std::move(c));
}

PowerSeries PowerSeries::truncate_to(int order) const {
    // keep powers >= -order
    int low = -order;
    if (low <= lowest_power()) return *this;
    int keep = lead_ - low + 1;
    if (keep <= 0) return PowerSeries(var_, lead_, {});
    std::vector<Matrix> c(c_.begin(), c_.begin() + keep);
    return PowerSeries(var_, lead_, std::move(c));
}

Matrix PowerSeries::eval_partial(std::complex<double> s, int through_inverse_power) const {
    Matrix acc(dim(), dim(), Backend::floating);
    for (size_t k = 0; k < c_.size(); ++k) {
        int p = lead_ - static_cast<int>(k);
        if (p < -through_inverse_power) break;
        std::complex<double> f = std::pow(s, p);
        acc = acc + Scalar(f) * c_[k].to_float();
    }
    return acc;
}

} // namespace yrk
