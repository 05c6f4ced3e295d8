#include "ratell/bernstein.hpp"

#include <algorithm>
#include <cassert>

namespace ratell {

namespace {

void check_interval(const Interval& iv) {
    if (iv.lo > iv.hi)
        throw ParameterOutOfRangeError("interval with lo > hi: [" + iv.lo.to_string() + ", " +
                                       iv.hi.to_string() + "]");
}

// Power coefficients of q(s) = p(lo + (hi - lo) s) given the power
// coefficients of p, i.e. the substitution that maps [0,1] onto the interval.
std::vector<Rational> remap_to_unit(const std::vector<Rational>& c, const Interval& iv) {
    const std::size_t n = c.size();
    const Rational w = iv.width();
    std::vector<Rational> out(n, Rational(0));
    std::vector<Rational> w_pow(n, Rational(1));
    for (std::size_t i = 1; i < n; ++i) w_pow[i] = w_pow[i - 1] * w;
    for (std::size_t e = 0; e < n; ++e) {
        if (c[e].is_zero()) continue;
        // (lo + w s)^e = sum_i C(e,i) lo^(e-i) w^i s^i
        Rational lo_pow(1);
        for (std::size_t i = e + 1; i-- > 0;) {
            out[i] += c[e] * Rational(binomial(e, i)) * lo_pow * w_pow[i];
            lo_pow = lo_pow * iv.lo;
        }
    }
    return out;
}

// Power basis on [0,1] -> Bernstein basis of the same degree:
// b_j = sum_{i<=j} C(j,i)/C(d,i) * c_i.
std::vector<Rational> power_to_bernstein(const std::vector<Rational>& c) {
    const std::size_t d = c.size() - 1;
    std::vector<Rational> b(c.size(), Rational(0));
    for (std::size_t j = 0; j <= d; ++j)
        for (std::size_t i = 0; i <= j; ++i) {
            if (c[i].is_zero()) continue;
            b[j] += c[i] * Rational(binomial(j, i), binomial(d, i));
        }
    return b;
}

std::vector<Rational> unit_interval_bernstein(const std::vector<Rational>& power,
                                              const Interval& iv) {
    return power_to_bernstein(remap_to_unit(power, iv));
}

// Splits one Bernstein coefficient row at parameter 1/2.
void de_casteljau_row(std::vector<Rational> b, std::vector<Rational>& left,
                      std::vector<Rational>& right) {
    const std::size_t d = b.size() - 1;
    const Rational half(Int(1), Int(2));
    left[0] = b[0];
    right[d] = b[d];
    for (std::size_t r = 1; r <= d; ++r) {
        for (std::size_t i = 0; i + r <= d; ++i) b[i] = (b[i] + b[i + 1]) * half;
        left[r] = b[0];
        right[d - r] = b[d - r];
    }
}

}  // namespace

std::vector<Rational> bernstein_coefficients(const UniPoly& p, const Interval& iv) {
    if (p.is_zero()) throw ZeroPolynomialError("bernstein_coefficients of the zero polynomial");
    check_interval(iv);
    std::vector<Rational> power(*p.degree() + 1, Rational(0));
    for (const auto& [k, c] : p.terms()) power[k] = c;
    return unit_interval_bernstein(power, iv);
}

BernsteinTensor::BernsteinTensor(std::array<unsigned, 3> degrees)
    : deg_(degrees),
      entries_(static_cast<std::size_t>(deg_[0] + 1) * (deg_[1] + 1) * (deg_[2] + 1),
               Rational(0)) {}

std::pair<Rational, Rational> BernsteinTensor::coefficient_range() const {
    Rational lo = entries_.front(), hi = entries_.front();
    for (const Rational& e : entries_) {
        if (e < lo) lo = e;
        if (hi < e) hi = e;
    }
    return {lo, hi};
}

std::pair<BernsteinTensor, BernsteinTensor> BernsteinTensor::split(unsigned axis) const {
    assert(axis < 3);
    BernsteinTensor lower(deg_), upper(deg_);
    const unsigned d = deg_[axis];
    std::vector<Rational> row(d + 1), left(d + 1), right(d + 1);
    const unsigned n0 = deg_[0] + 1, n1 = deg_[1] + 1, n2 = deg_[2] + 1;
    const unsigned lim_a = (axis == 0) ? n1 : n0;
    const unsigned lim_b = (axis == 2) ? n1 : n2;
    for (unsigned a = 0; a < lim_a; ++a)
        for (unsigned b = 0; b < lim_b; ++b) {
            auto fiber = [&](unsigned s) -> std::array<unsigned, 3> {
                switch (axis) {
                    case 0: return {s, a, b};
                    case 1: return {a, s, b};
                    default: return {a, b, s};
                }
            };
            for (unsigned s = 0; s <= d; ++s) {
                auto [i, j, k] = fiber(s);
                row[s] = at(i, j, k);
            }
            de_casteljau_row(row, left, right);
            for (unsigned s = 0; s <= d; ++s) {
                auto [i, j, k] = fiber(s);
                lower.at(i, j, k) = left[s];
                upper.at(i, j, k) = right[s];
            }
        }
    return {std::move(lower), std::move(upper)};
}

BernsteinTensor bernstein_coefficients(const TriPoly& p, const Box& box) {
    if (p.is_zero()) throw ZeroPolynomialError("bernstein_coefficients of the zero polynomial");
    if (box.dims() != 3)
        throw ParameterOutOfRangeError("box must have exactly three intervals, got " +
                                       std::to_string(box.dims()));
    for (const Interval& iv : box.iv) check_interval(iv);

    const std::array<unsigned, 3> d = p.degrees();
    const unsigned n0 = d[0] + 1, n1 = d[1] + 1, n2 = d[2] + 1;

    // Dense power-basis tensor, then the univariate power->Bernstein
    // transform applied along each axis in turn (the trivariate transform is
    // the tensor product of the univariate ones).
    std::vector<std::vector<std::vector<Rational>>> c(
        n0, std::vector<std::vector<Rational>>(n1, std::vector<Rational>(n2, Rational(0))));
    for (const auto& [e, coeff] : p.terms()) c[e.k][e.p][e.q] = coeff;

    std::vector<Rational> fiber;
    for (unsigned j = 0; j < n1; ++j)
        for (unsigned k = 0; k < n2; ++k) {
            fiber.assign(n0, Rational(0));
            for (unsigned i = 0; i < n0; ++i) fiber[i] = c[i][j][k];
            fiber = unit_interval_bernstein(fiber, box.iv[0]);
            for (unsigned i = 0; i < n0; ++i) c[i][j][k] = fiber[i];
        }
    for (unsigned i = 0; i < n0; ++i)
        for (unsigned k = 0; k < n2; ++k) {
            fiber.assign(n1, Rational(0));
            for (unsigned j = 0; j < n1; ++j) fiber[j] = c[i][j][k];
            fiber = unit_interval_bernstein(fiber, box.iv[1]);
            for (unsigned j = 0; j < n1; ++j) c[i][j][k] = fiber[j];
        }

    BernsteinTensor tensor(d);
    for (unsigned i = 0; i < n0; ++i)
        for (unsigned j = 0; j < n1; ++j) {
            fiber = c[i][j];
            fiber = unit_interval_bernstein(fiber, box.iv[2]);
            for (unsigned k = 0; k < n2; ++k) tensor.at(i, j, k) = fiber[k];
        }
    return tensor;
}

namespace {

struct SearchState {
    const TriPoly& p;
    unsigned max_depth;
    unsigned deepest_depth = 0;
    unsigned node_count = 0;
    std::optional<Witness> witness;
    bool any_undecided = false;
};

// Corner and center samples; returns a witness point if any value is <= 0.
std::optional<Witness> sample_box(const TriPoly& p, const Box& box) {
    std::vector<std::array<Rational, 3>> points;
    for (int mask = 0; mask < 8; ++mask)
        points.push_back({(mask & 1) ? box.iv[0].hi : box.iv[0].lo,
                          (mask & 2) ? box.iv[1].hi : box.iv[1].lo,
                          (mask & 4) ? box.iv[2].hi : box.iv[2].lo});
    points.push_back({box.iv[0].midpoint(), box.iv[1].midpoint(), box.iv[2].midpoint()});
    for (const auto& pt : points) {
        const Rational value = p.evaluate(pt[0], pt[1], pt[2]);
        if (value.sign() <= 0) return Witness{{pt[0], pt[1], pt[2]}, value};
    }
    return std::nullopt;
}

unsigned widest_axis(const Box& box) {
    unsigned axis = 0;
    for (unsigned a = 1; a < 3; ++a)
        if (box.iv[a].width() > box.iv[axis].width()) axis = a;
    return axis;
}

// Returns true when the subtree rooted at node is fully certified positive;
// a witness or the undecided flag in state carries the other outcomes.
bool descend(SearchState& state, BoxNode& node, const BernsteinTensor& tensor) {
    ++state.node_count;
    state.deepest_depth = std::max(state.deepest_depth, node.depth);

    if (auto w = sample_box(state.p, node.box)) {
        node.status = BoxStatus::WitnessLeaf;
        state.witness = std::move(w);
        return false;
    }

    auto [lo, hi] = tensor.coefficient_range();
    node.coeff_min = lo;
    node.coeff_max = hi;
    if (lo.sign() > 0) {
        node.status = BoxStatus::CertifiedLeaf;
        return true;
    }
    if (node.depth >= state.max_depth) {
        node.status = BoxStatus::UndecidedLeaf;
        state.any_undecided = true;
        return false;
    }

    const unsigned axis = widest_axis(node.box);
    node.status = BoxStatus::Split;
    node.split_axis = static_cast<int>(axis);
    const Rational mid = node.box.iv[axis].midpoint();
    Box lower_box = node.box, upper_box = node.box;
    lower_box.iv[axis].hi = mid;
    upper_box.iv[axis].lo = mid;
    auto [lower_tensor, upper_tensor] = tensor.split(axis);

    node.lower = std::make_unique<BoxNode>();
    node.lower->box = std::move(lower_box);
    node.lower->depth = node.depth + 1;
    const bool lower_ok = descend(state, *node.lower, lower_tensor);
    if (state.witness) return false;

    node.upper = std::make_unique<BoxNode>();
    node.upper->box = std::move(upper_box);
    node.upper->depth = node.depth + 1;
    const bool upper_ok = descend(state, *node.upper, upper_tensor);
    return lower_ok && upper_ok && !state.witness;
}

}  // namespace

BoxCertificate certify_positive_on_box(const TriPoly& p, const Box& box, unsigned max_depth) {
    if (p.is_zero()) throw ZeroPolynomialError("certify_positive_on_box of the zero polynomial");
    if (box.dims() != 3)
        throw ParameterOutOfRangeError("box must have exactly three intervals, got " +
                                       std::to_string(box.dims()));
    for (const Interval& iv : box.iv) check_interval(iv);

    BoxCertificate cert;
    cert.max_depth = max_depth;
    cert.root = std::make_unique<BoxNode>();
    cert.root->box = box;

    SearchState state{p, max_depth};
    const bool all_positive = descend(state, *cert.root, bernstein_coefficients(p, box));
    cert.deepest_depth = state.deepest_depth;
    cert.node_count = state.node_count;
    cert.witness = state.witness;
    if (state.witness)
        cert.verdict = Verdict::NonPositive;
    else if (all_positive)
        cert.verdict = Verdict::Positive;
    else
        cert.verdict = Verdict::Undecided;
    return cert;
}

}  // namespace ratell
