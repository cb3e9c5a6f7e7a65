#include "asianq/specfun.hpp"
#include "asianq/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace asianq {

namespace {

bool is_nonpositive_integer(ComplexValue b) {
    return b.imag() == 0.0 && b.real() <= 0.0 && b.real() == std::floor(b.real());
}

template <class C, class R>
C kummer_series(const C& a, const C& b, const R& z, const R& eps, int max_terms) {
    C sum = 1, term = 1;
    int small = 0;
    for (int n = 0; n < max_terms; ++n) {
        term *= (a + R(n)) / (b + R(n)) * z / R(n + 1);
        sum += term;
        if (abs(term) < eps * abs(sum)) {
            if (++small == 3) return sum;
        } else {
            small = 0;
        }
    }
    throw convergence_error("kummer_m: series did not converge within the term cap");
}

// ---- extended precision pieces for the connection formula -----------------

using qcomplex = boost::multiprecision::cpp_complex_quad;
using qreal = boost::multiprecision::cpp_bin_float_quad;

qreal q_pi() { return boost::math::constants::pi<qreal>(); }

qcomplex q_gamma(qcomplex w) {
    if (real(w) < 0.5) {
        return q_pi() / (sin(q_pi() * w) * q_gamma(qcomplex(1) - w));
    }
    // Stirling series after shifting Re(w) past 40
    static const std::array<std::pair<double, double>, 15> bern = {{
        {1, 6}, {-1, 30}, {1, 42}, {-1, 30}, {5, 66}, {-691, 2730}, {7, 6},
        {-3617, 510}, {43867, 798}, {-174611, 330}, {854513, 138},
        {-236364091, 2730}, {8553103, 6}, {-23749461029.0, 870},
        {8615841276005.0, 14322}}};
    qcomplex prod = 1;
    while (real(w) < 40) {
        prod *= w;
        w += 1;
    }
    qcomplex lg = (w - qreal(0.5)) * log(w) - w + log(2 * q_pi()) / 2;
    qcomplex winv = qcomplex(1) / w, wpow = winv, w2 = winv * winv;
    for (std::size_t k = 1; k <= bern.size(); ++k) {
        qreal b2k = qreal(bern[k - 1].first) / qreal(bern[k - 1].second);
        lg += b2k / qreal(2 * k * (2 * k - 1)) * wpow;
        wpow *= w2;
    }
    return exp(lg) / prod;
}

ComplexValue tricomi_connection(ComplexValue a_, ComplexValue b_, double z_) {
    if (b_.imag() == 0.0 && b_.real() == std::round(b_.real()))
        throw precision_loss_error("tricomi_u: connection formula singular at integer b");
    const qcomplex a(a_.real(), a_.imag()), b(b_.real(), b_.imag());
    const qreal z(z_);
    const qreal eps("1e-36");
    const qcomplex one(1), two(2);
    const qcomplex m1 = kummer_series<qcomplex, qreal>(a, b, z, eps, 20000);
    const qcomplex m2 = kummer_series<qcomplex, qreal>(one + a - b, two - b, z, eps, 20000);
    const qcomplex t1 = m1 / (q_gamma(one + a - b) * q_gamma(b));
    const qcomplex t2 = pow(qcomplex(z), one - b) * m2 / (q_gamma(a) * q_gamma(two - b));
    const qcomplex diff = t1 - t2;
    const qreal cancel = (abs(t1) + abs(t2)) / abs(diff);
    if (!(cancel < qreal(1e17)))
        throw precision_loss_error("tricomi_u: connection formula cancellation exceeds precision");
    const qcomplex u = q_pi() / sin(q_pi() * b) * diff;
    return {real(u).convert_to<double>(), imag(u).convert_to<double>()};
}

// ---- integral representation ------------------------------------------------

// U(a,b,z) Gamma(a) = int_{-inf}^{inf} exp(-z e^v) e^{a v} (1+e^v)^{b-a-1} dv,  t = e^v
ComplexValue tricomi_integral(ComplexValue a, ComplexValue b, double z) {
    using boost::math::quadrature::gauss_kronrod;
    const ComplexValue c = b - a - 1.0;
    auto f = [&](double v) -> ComplexValue {
        const double t = std::exp(v);
        const double lm = -z * t + a.real() * v + c.real() * std::log1p(t);
        const double ph = a.imag() * v + c.imag() * std::log1p(t);
        return std::polar(std::exp(lm), ph);
    };
    // window where the integrand is above e^-40 of its envelope
    const double vlo = -40.0 / a.real() - 1.0;
    double vhi = std::log((60.0 + std::abs(c.real()) * 10.0) / z) + 2.0;
    vhi = std::max(vhi, std::log(1.0 / z) + 4.0);
    // unit-phase panels, refined against the L1 norm of the whole integrand
    const double rate = std::abs(a.imag()) + std::abs(c.imag()) + 1.0;
    const double width = std::min(0.5, 1.0 / rate);
    struct Piece {
        double lo, hi;
        ComplexValue value;
        double err, l1;
    };
    auto piece = [&](double lo, double hi) {
        Piece pc{lo, hi, 0.0, 0.0, 0.0};
        pc.value = gauss_kronrod<double, 21>::integrate(f, lo, hi, 0, 0.0, &pc.err, &pc.l1);
        return pc;
    };
    std::vector<Piece> pieces;
    double l1 = 0.0;
    for (double v = vlo; v < vhi;) {
        const double e = std::min(v + width, vhi);
        pieces.push_back(piece(v, e));
        l1 += pieces.back().l1;
        v = e;
    }
    ComplexValue sum = 0.0;
    std::vector<std::pair<Piece, int>> todo;
    for (const Piece& pc : pieces) todo.push_back({pc, 0});
    while (!todo.empty()) {
        auto [pc, depth] = todo.back();
        todo.pop_back();
        const double tol = 1e-16 * l1 * (pc.hi - pc.lo) / (vhi - vlo);
        if (pc.err <= std::max(tol, 1e-13 * pc.l1) || depth == 10) {
            sum += pc.value;
            continue;
        }
        const double m = 0.5 * (pc.lo + pc.hi);
        todo.push_back({piece(pc.lo, m), depth + 1});
        todo.push_back({piece(m, pc.hi), depth + 1});
    }
    return sum * std::exp(-log_gamma_complex(a));
}

} // namespace

ComplexValue kummer_m(ComplexValue a, ComplexValue b, double z, const KummerOptions& opt) {
    if (is_nonpositive_integer(b)) throw pole_error("kummer_m: b is a nonpositive integer");
    if (!std::isfinite(z)) throw domain_error("kummer_m: non-finite argument");
    if (z == 0.0) return 1.0;
    if (z < 0.0 && opt.allow_transform)
        return std::exp(z) * kummer_series<ComplexValue, double>(b - a, b, -z, 1e-17, opt.max_terms);
    return kummer_series<ComplexValue, double>(a, b, z, 1e-17, opt.max_terms);
}

ComplexValue tricomi_u(ComplexValue a, ComplexValue b, double z, TricomiPath path) {
    if (!(z > 0.0)) throw domain_error("tricomi_u: requires z > 0");
    if (a == 0.0) return 1.0;
    switch (path) {
    case TricomiPath::connection:
        return tricomi_connection(a, b, z);
    case TricomiPath::integral:
        if (!(a.real() > 0.0)) throw domain_error("tricomi_u: integral path needs Re(a) > 0");
        return tricomi_integral(a, b, z);
    case TricomiPath::automatic:
        break;
    }
    if (a.real() >= 0.5) return tricomi_integral(a, b, z);

    // U(a-1) = -(b-2a-z) U(a) - a(a-b+1) U(a+1), run downward from Re(a+m) >= 0.5
    const int m = static_cast<int>(std::ceil(0.5 - a.real()));
    ComplexValue top = a + static_cast<double>(m);
    ComplexValue u1 = tricomi_integral(top + 1.0, b, z);
    ComplexValue u0 = tricomi_integral(top, b, z);
    for (int j = 0; j < m; ++j) {
        const ComplexValue an = top - static_cast<double>(j);
        const ComplexValue um = -(b - 2.0 * an - z) * u0 - an * (an - b + 1.0) * u1;
        u1 = u0;
        u0 = um;
    }
    return u0;
}

} // namespace asianq
