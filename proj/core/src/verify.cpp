#include "qmech/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "qmech/calculus.hpp"
#include "qmech/cli.hpp"
#include "qmech/dynamics.hpp"
#include "qmech/expr.hpp"
#include "qmech/flow.hpp"
#include "qmech/printer.hpp"
#include "qmech/quantization.hpp"
#include "qmech/realization.hpp"

namespace qmech {
namespace {

using Rng = std::mt19937;

ScalarExpr random_rational(Rng& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    int n = num(rng);
    if (n == 0) n = 1;
    return ScalarExpr::rational(n, den(rng));
}

ScalarExpr random_scalar(Rng& rng, bool with_params = false) {
    std::uniform_int_distribution<int> spow(-4, 4);
    ScalarExpr c = random_rational(rng) * ScalarExpr::s_power(spow(rng));
    if (with_params) {
        std::uniform_int_distribution<int> pick(0, 3);
        int which = pick(rng);
        if (which == 1) c = c * ScalarExpr::parameter("m");
        if (which == 2) c = c * ScalarExpr::parameter("w");
    }
    return c;
}

QPoly random_qpoly(Rng& rng, int max_degree, bool with_params = false) {
    std::uniform_int_distribution<int> terms(1, 4);
    std::uniform_int_distribution<int> deg(0, std::max(max_degree, 0));
    QPoly f;
    int t = terms(rng);
    for (int k = 0; k < t; ++k) {
        int n = deg(rng);
        std::uniform_int_distribution<int> rest(0, std::max(max_degree - n, 0));
        f.add(n, rest(rng), random_scalar(rng, with_params));
    }
    return f;
}

// Classical Poisson bracket of commutative shadows.
ShadowPoly classical_pb(const ShadowPoly& f, const ShadowPoly& g) {
    return f.partial(0) * g.partial(1) - f.partial(1) * g.partial(0);
}

void absorb(Report& into, const Report& sub, const std::string& prefix) {
    for (const auto& check : sub.checks) {
        into.add(prefix + check.name, check.pass, check.detail);
    }
}

std::string count_detail(int pass, int total) {
    return std::to_string(pass) + "/" + std::to_string(total);
}

// ---------------------------------------------------------------- coeff --

Report suite_coeff(const VerifyOptions& options) {
    Report report;
    report.suite = "coeff";
    Rng rng(options.seed + 1);

    bool rec2 = true;
    bool rec1 = true;
    bool telescope = true;
    for (int n = 0; n <= 8; ++n) {
        rec2 = rec2 && qint(n + 1) == qint(n) + ScalarExpr::s_power(4 * n);
        rec1 = rec1 && qint1(n + 1) == qint1(n) + ScalarExpr::s_power(2 * n);
        telescope = telescope &&
                    (ScalarExpr::q_power(2) - 1) * qint(n) ==
                        ScalarExpr::q_power(2 * n) - 1;
    }
    report.add("q-integer recurrence", rec2);
    report.add("step-q integer recurrence", rec1);
    report.add("q-integer telescoping product", telescope);

    {
        // (1 - q^4)/(1 - q^2) == 1 + q^2 without polynomial division.
        ScalarExpr lhs(Poly(1) - Poly::s_power(8), Poly(1) - Poly::s_power(4));
        report.add("cross-multiplied equality", lhs == 1 + ScalarExpr::q_power(2));
    }

    {
        int pass = 0;
        const int total = 50;
        for (int k = 0; k < total; ++k) {
            ScalarExpr a = random_scalar(rng, true);
            ScalarExpr b = random_scalar(rng, true) + random_scalar(rng, true);
            if (b.is_zero()) b = ScalarExpr(1);
            bool ok = (a / b) * b == a && a - a == 0 &&
                      (a + b) * (a - b) == a * a - b * b;
            ok = ok && b.inverse() * b == 1;
            if (ok) ++pass;
        }
        report.add("field arithmetic round trip", pass == total,
                   count_detail(pass, total));
    }

    {
        ScalarExpr alpha = qint(3) * ScalarExpr::parameter("m");
        ScalarExpr beta = ScalarExpr::rational(-7, 2) * ScalarExpr::s_power(-3);
        ScalarExpr combined = alpha * ScalarExpr::parameter("d4") + beta;
        auto [a, b] = combined.split_linear("d4");
        report.add("linear coefficient split", a == alpha && b == beta);
    }

    {
        bool ok = true;
        for (int n = 0; n <= 6; ++n) ok = ok && qint(n).at_q1() == ScalarExpr(n);
        report.add("undeformed limit of q-integers", ok);
    }

    {
        ScalarExpr e = (1 + ScalarExpr::q_power(2)) / (2 * ScalarExpr::q_power(1));
        double q = 1.7;
        std::complex<double> got = e.eval_numeric({}, q);
        double want = (1.0 + q * q) / (2.0 * q);
        report.add("numeric evaluation agrees with exact form",
                   std::abs(got - std::complex<double>(want)) < 1e-12);
    }

    {
        bool threw = false;
        try {
            ScalarExpr::parameter("m").eval_numeric({}, 2.0);
        } catch (const UnboundParameterError&) {
            threw = true;
        }
        report.add("unbound parameter is rejected", threw);
    }

    return report;
}

// ------------------------------------------------------------- qalgebra --

Report suite_qalgebra(const VerifyOptions& options) {
    Report report;
    report.suite = "qalgebra";
    Rng rng(options.seed + 2);

    report.add("exchange relation p x = q x p",
               QPoly::p() * QPoly::x() ==
                   ScalarExpr::q_power(1) * (QPoly::x() * QPoly::p()));

    {
        int pass = 0;
        const int total = 100;
        std::uniform_int_distribution<int> e(0, 6);
        for (int k = 0; k < total; ++k) {
            int a = e(rng), b = e(rng), c = e(rng), d = e(rng);
            QPoly lhs = QPoly::monomial(a, b, ScalarExpr(1)) *
                        QPoly::monomial(c, d, ScalarExpr(1));
            QPoly rhs = QPoly::monomial(a + c, b + d, ScalarExpr::q_power(b * c));
            if (lhs == rhs) ++pass;
        }
        report.add("ordered monomial product rule", pass == total,
                   count_detail(pass, total));
    }

    {
        int pass = 0;
        const int total = 100;
        std::uniform_int_distribution<int> len(0, 8);
        std::uniform_int_distribution<int> gen(0, 1);
        for (int k = 0; k < total; ++k) {
            FreeWord word;
            word.prefactor = random_scalar(rng);
            QPoly product(word.prefactor);
            int n = len(rng);
            for (int j = 0; j < n; ++j) {
                Gen g = gen(rng) ? Gen::P : Gen::X;
                word.letters.push_back(g);
                product = product * (g == Gen::X ? QPoly::x() : QPoly::p());
            }
            if (normal_order(word) == product) ++pass;
        }
        report.add("word ordering equals generator products", pass == total,
                   count_detail(pass, total));
    }

    {
        int pass = 0;
        const int total = 50;
        for (int k = 0; k < total; ++k) {
            QPoly f = random_qpoly(rng, options.max_degree);
            QPoly g = random_qpoly(rng, options.max_degree);
            QPoly h = random_qpoly(rng, options.max_degree);
            if ((f * g) * h == f * (g * h)) ++pass;
        }
        report.add("associativity", pass == total, count_detail(pass, total));
    }

    {
        QPoly f = random_qpoly(rng, options.max_degree, true);
        ScalarExpr c = random_scalar(rng, true);
        report.add("scalars are central", c * f == f * c);
    }

    {
        int pass = 0;
        const int total = 50;
        for (int k = 0; k < total; ++k) {
            QPoly f = random_qpoly(rng, options.max_degree);
            QPoly g = random_qpoly(rng, options.max_degree);
            if ((f * g).at_q1().shadow() ==
                f.at_q1().shadow() * g.at_q1().shadow())
                ++pass;
        }
        report.add("undeformed shadow is multiplicative", pass == total,
                   count_detail(pass, total));
    }

    {
        int pass = 0;
        const int total = 200;
        ParseOptions popts;
        popts.parameters = {"m", "w"};
        for (int k = 0; k < total; ++k) {
            QPoly f = random_qpoly(rng, options.max_degree, true);
            if (parse_qpoly(to_text(f), popts) == f) ++pass;
        }
        report.add("print then parse is identity", pass == total,
                   count_detail(pass, total));
    }

    return report;
}

// ------------------------------------------------------------ qcalculus --

Report suite_qcalculus(const VerifyOptions& options) {
    Report report;
    report.suite = "qcalculus";
    Rng rng(options.seed + 3);

    const QPoly x = QPoly::x();
    const QPoly p = QPoly::p();

    {
        bool ok = qpb_direct(x, p) == QPoly(ScalarExpr::s_power(1)) &&
                  qpb_direct(p, x) == QPoly(-ScalarExpr::s_power(-1)) &&
                  qpb_direct(x, x).is_zero() && qpb_direct(p, p).is_zero();
        report.add("generator structure constants", ok);
    }

    {
        QPoly sum = qpb_direct(x, p) + ScalarExpr::q_power(1) * qpb_direct(p, x);
        QPoly prod = qpb_direct(x, p) * qpb_direct(p, x);
        report.add("broken skew symmetry", sum.is_zero() && prod == QPoly(-1));
    }

    {
        int pass = 0;
        const int total = 30;
        for (int k = 0; k < total; ++k) {
            QPoly f = random_qpoly(rng, options.max_degree);
            QPoly g = random_qpoly(rng, options.max_degree);
            QPoly h = random_qpoly(rng, options.max_degree);
            ScalarExpr a = random_scalar(rng);
            ScalarExpr b = random_scalar(rng);
            bool ok = qpb_direct(a * f + b * g, h) ==
                          a * qpb_direct(f, h) + b * qpb_direct(g, h) &&
                      qpb_direct(h, a * f + b * g) ==
                          a * qpb_direct(h, f) + b * qpb_direct(h, g);
            if (ok) ++pass;
        }
        report.add("bilinearity", pass == total, count_detail(pass, total));
    }

    {
        int pass = 0;
        const int total = 50;
        for (int k = 0; k < total; ++k) {
            QPoly f = random_qpoly(rng, options.max_degree);
            QOneForm right = differential(f, Side::Right);
            QOneForm back = convert_form(convert_form(right, Side::Left), Side::Right);
            if (back.cx == right.cx && back.cp == right.cp) ++pass;
        }
        report.add("side conversion round trip", pass == total,
                   count_detail(pass, total));
    }

    {
        int pass = 0;
        const int total = 50;
        for (int k = 0; k < total; ++k) {
            QPoly f = random_qpoly(rng, options.max_degree);
            QOneForm left_direct = differential(f, Side::Left);
            QOneForm left_converted = convert_form(differential(f, Side::Right), Side::Left);
            if (left_direct.cx == left_converted.cx &&
                left_direct.cp == left_converted.cp)
                ++pass;
        }
        report.add("left derivative closed form matches conversion", pass == total,
                   count_detail(pass, total));
    }

    {
        QOneForm dx{QPoly(1), QPoly(0), Side::Right};
        QOneForm dp{QPoly(0), QPoly(1), Side::Right};
        bool ok = wedge(dx, dp).c == QPoly(1) &&
                  wedge(dp, dx).c == QPoly(-ScalarExpr::q_power(-1)) &&
                  wedge(dx, dx).c.is_zero() && wedge(dp, dp).c.is_zero();
        report.add("wedge reduction to the area basis", ok);
    }

    {
        int pass = 0;
        const int total = 100;
        for (int k = 0; k < total; ++k) {
            QPoly f = random_qpoly(rng, options.max_degree);
            QPoly g = random_qpoly(rng, options.max_degree);
            if (qpb_direct(f, g) == qpb_contract(f, g)) ++pass;
        }
        report.add("direct and contraction routes agree", pass == total,
                   count_detail(pass, total));
    }

    {
        int pass = 0;
        const int total = 20;
        const ScalarExpr q2 = ScalarExpr::q_power(2);
        for (int k = 0; k < total; ++k) {
            QPoly f = random_qpoly(rng, options.max_degree);
            QVector printed = hamiltonian_field(f);
            QVector solved = field_from_contraction(f);
            if (solved.cx == printed.cx && solved.cp == q2 * printed.cp) ++pass;
        }
        report.add("contraction solve differs by q^2 on del_p only", pass == total,
                   "documented normalization gap, ratio is exact");
    }

    {
        // Double brackets of generators close on scalars, so each cyclic sum
        // vanishes term by term.
        auto dbl = [&](const QPoly& a, const QPoly& b, const QPoly& c) {
            return qpb_direct(a, qpb_direct(b, c));
        };
        bool ok = (dbl(x, x, p) + dbl(x, p, x) + dbl(p, x, x)).is_zero() &&
                  (dbl(p, p, x) + dbl(p, x, p) + dbl(x, p, p)).is_zero();
        report.add("generator double brackets vanish cyclically", ok);
    }

    {
        int pass = 0;
        const int total = 100;
        int degree = std::min(options.max_degree, 4);
        for (int k = 0; k < total; ++k) {
            QPoly f = random_qpoly(rng, degree);
            QPoly g = random_qpoly(rng, degree);
            ShadowPoly lhs = qpb_direct(f, g).at_q1().shadow();
            ShadowPoly rhs = classical_pb(f.at_q1().shadow(), g.at_q1().shadow());
            if (lhs == rhs) ++pass;
        }
        report.add("undeformed bracket is the classical bracket", pass == total,
                   count_detail(pass, total));
    }

    return report;
}

// ------------------------------------------------------------- dynamics --

Report suite_dynamics(const VerifyOptions& options) {
    Report report;
    report.suite = "dynamics";
    Rng rng(options.seed + 4);

    const ScalarExpr m = ScalarExpr::parameter("m");
    const ScalarExpr w = ScalarExpr::parameter("w");
    // 1/m_q = [2] / (2 m q^(3/2)).
    const ScalarExpr inv_mq = qint(2) * ScalarExpr::s_power(-3) / (2 * m);

    {
        MotionEquations eq = hamilton_equations(HamiltonianSpec::free_particle(m).to_qpoly());
        bool ok = eq.xdot == QPoly::monomial(0, 1, inv_mq) && eq.pdot.is_zero();
        report.add("free particle: velocity p over effective mass", ok);
        QPoly h0 = HamiltonianSpec::free_particle(m).to_qpoly();
        report.add("free particle: energy conserved", qpb_direct(h0, h0).is_zero());
    }

    {
        MotionEquations eq = hamilton_equations(HamiltonianSpec::harmonic(m, w).to_qpoly());
        // m_q w_q^2 = (1/2) m w^2 [2] q^(-5/2).
        ScalarExpr mq_wq2 = m * w * w * qint(2) * ScalarExpr::s_power(-5) / 2;
        bool ok = eq.xdot == QPoly::monomial(0, 1, inv_mq) &&
                  eq.pdot == QPoly::monomial(1, 0, -mq_wq2);
        report.add("oscillator: force is minus effective stiffness times x", ok);
    }

    {
        int pass = 0;
        const int total = 30;
        for (int k = 0; k < total; ++k) {
            QPoly h = random_qpoly(rng, options.max_degree, true);
            MotionEquations direct = hamilton_equations(h);
            MotionEquations bracket = hamilton_equations_bracket(h);
            if (direct.xdot == bracket.xdot && direct.pdot == bracket.pdot) ++pass;
        }
        report.add("closed-form and bracket equations agree", pass == total,
                   count_detail(pass, total));
    }

    {
        int pass = 0;
        const int total = 100;
        std::uniform_int_distribution<int> e(0, options.max_degree);
        for (int k = 0; k < total; ++k) {
            int n = e(rng);
            std::uniform_int_distribution<int> rest(0, std::max(options.max_degree - n, 0));
            QPoly f = QPoly::monomial(n, rest(rng), random_scalar(rng));
            QPoly h = random_qpoly(rng, options.max_degree, true);
            if (time_derivative(f, h) == time_derivative_monomial(f, h)) ++pass;
        }
        report.add("monomial decomposition of the evolution bracket", pass == total,
                   count_detail(pass, total));
    }

    {
        int pass = 0;
        const int total = 20;
        std::uniform_int_distribution<int> e(1, std::max(options.max_degree, 1));
        for (int k = 0; k < total; ++k) {
            HamiltonianSpec spec;
            spec.mass = m;
            int n = e(rng);
            spec.potential = {{n, random_rational(rng) * w}};
            QPoly v;
            for (const auto& term : spec.potential)
                v.add(term.first, 0, term.second);
            MotionEquations eq = hamilton_equations(spec.to_qpoly());
            if (eq.pdot == force(v)) ++pass;
        }
        report.add("momentum equation equals the deformed force", pass == total,
                   count_detail(pass, total));
    }

    {
        QPoly conserved = find_conserved(HamiltonianSpec::harmonic(m, w));
        QPoly expected = QPoly::monomial(0, 2, ScalarExpr(1) / (2 * m)) +
                         QPoly::monomial(2, 0,
                                         m * w * w * ScalarExpr::q_power(-2) / 2);
        QPoly h = HamiltonianSpec::harmonic(m, w).to_qpoly();
        bool ok = conserved == expected && qpb_direct(conserved, h).is_zero();
        report.add("oscillator conserved energy", ok);
    }

    {
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= 8 && ok; ++n) {
            HamiltonianSpec spec;
            spec.mass = m;
            ScalarExpr cn = ScalarExpr::parameter("c" + std::to_string(n));
            spec.potential = {{n, cn}};
            QPoly conserved = find_conserved(spec);
            ScalarExpr dn = conserved.coeff(n, 0);
            if (!(dn == cn * ScalarExpr::q_power(4 - 3 * n))) {
                ok = false;
                witness = "n=" + std::to_string(n) + ": " + to_text(dn);
            }
        }
        report.add("power potential rescaling q^(4-3n)", ok, witness);
    }

    {
        HamiltonianSpec spec;
        spec.mass = m;
        spec.potential = {};
        for (int n = 1; n <= 8; ++n) {
            spec.potential.push_back(
                {n, ScalarExpr::parameter("c" + std::to_string(n))});
        }
        QPoly conserved = find_conserved(spec);
        QPoly h = spec.to_qpoly();
        bool law = true;
        for (int n = 1; n <= 8; ++n) {
            law = law && conserved.coeff(n, 0) ==
                             ScalarExpr::parameter("c" + std::to_string(n)) *
                                 ScalarExpr::q_power(4 - 3 * n);
        }
        report.add("mixed polynomial potential stays conserved",
                   qpb_direct(conserved, h).is_zero() && law,
                   "rescaling law holds per term");
    }

    {
        HamiltonianSpec harmonic = HamiltonianSpec::harmonic(m, w);
        HamiltonianSpec mixed;
        mixed.mass = m;
        mixed.potential = {{1, ScalarExpr::parameter("c1")},
                           {3, ScalarExpr::parameter("c3")},
                           {7, ScalarExpr::parameter("c7")}};
        bool ok = find_conserved(harmonic).at_q1() == harmonic.to_qpoly().at_q1() &&
                  find_conserved(mixed).at_q1() == mixed.to_qpoly().at_q1();
        report.add("undeformed limit of the conserved energy is the Hamiltonian", ok);
    }

    {
        QPoly h = HamiltonianSpec::harmonic(m, w).to_qpoly();
        QPoly drift = time_derivative(h, h);
        // w_q^2 = w^2 [2]^2 / (4 q^4); drift = q^(3/2) (q^2 - 1) w_q^2 x p.
        ScalarExpr wq2 = w * w * qint(2) * qint(2) * ScalarExpr::q_power(-4) / 4;
        ScalarExpr coeff =
            ScalarExpr::s_power(3) * (ScalarExpr::q_power(2) - 1) * wq2;
        report.add("oscillator Hamiltonian drift",
                   drift == QPoly::monomial(1, 1, coeff),
                   "vanishes exactly at q = 1");
    }

    return report;
}

// ----------------------------------------------------------------- flow --

Report suite_flow(const VerifyOptions& options) {
    Report report;
    report.suite = "flow";
    (void)options;

    {
        FlowProblem problem;
        problem.spec = HamiltonianSpec::harmonic(ScalarExpr::parameter("m"),
                                                 ScalarExpr::parameter("w"));
        problem.bindings = {{"m", 1.0}, {"w", 1.0}};
        problem.q_value = 1.0;
        problem.x0 = 1.0;
        problem.p0 = 0.0;
        problem.dt = 1e-3;
        problem.steps = 10000;
        Trajectory traj = integrate(problem);
        double max_err = 0.0;
        for (const auto& s : traj.samples) {
            max_err = std::max(max_err, std::abs(s.x - std::cos(s.t)));
            max_err = std::max(max_err, std::abs(s.p + std::sin(s.t)));
        }
        std::ostringstream detail;
        detail << "max error " << max_err;
        report.add("undeformed oscillator tracks cosine", max_err < 1e-8,
                   detail.str());
    }

    {
        FlowProblem problem;
        problem.spec = HamiltonianSpec::harmonic(ScalarExpr::parameter("m"),
                                                 ScalarExpr::parameter("w"));
        problem.bindings = {{"m", 1.0}, {"w", 1.0}};
        problem.q_value = 1.2;
        problem.x0 = 1.0;
        problem.p0 = 0.5;
        problem.dt = 1e-3;
        problem.steps = 10000;
        Trajectory traj = integrate(problem);
        // The shadow system x' = p/m_q, p' = -m_q w_q^2 x conserves its own
        // energy p^2/(2 m_q) + (1/2) m_q w_q^2 x^2; the recorded deformed
        // energy is a different combination and must visibly drift for q != 1.
        const double q = problem.q_value;
        const double inv_mq = 0.5 * (std::sqrt(q) + std::pow(q, -1.5));
        const double stiffness = 0.5 * (std::pow(q, -0.5) + std::pow(q, -2.5));
        auto shadow_energy = [&](const TrajectorySample& s) {
            return 0.5 * inv_mq * s.p * s.p + 0.5 * stiffness * s.x * s.x;
        };
        double max_err = 0.0;
        double own_drift = 0.0;
        double eq_drift = 0.0;
        const double e0 = shadow_energy(traj.samples[0]);
        for (const auto& s : traj.samples) {
            auto [rx, rp] = analytic_reference(problem, s.t);
            max_err = std::max(max_err, std::abs(s.x - rx));
            max_err = std::max(max_err, std::abs(s.p - rp));
            own_drift = std::max(own_drift, std::abs(shadow_energy(s) - e0) / e0);
            eq_drift = std::max(eq_drift, std::abs(s.eq - traj.samples[0].eq));
        }
        std::ostringstream detail;
        detail << "max error " << max_err << ", shadow energy drift " << own_drift
               << ", recorded Eq drift " << eq_drift;
        report.add("deformed oscillator tracks the rescaled solution",
                   max_err < 1e-6, detail.str());
        report.add("shadow energy drift stays at integrator level",
                   own_drift < 1e-8, detail.str());
        report.add("recorded deformed energy is not constant off q = 1",
                   eq_drift > 1e-3, detail.str());
    }

    {
        FlowProblem problem;
        problem.spec = HamiltonianSpec::free_particle(ScalarExpr::parameter("m"));
        problem.bindings = {{"m", 2.0}};
        problem.q_value = 1.3;
        problem.x0 = -0.5;
        problem.p0 = 2.0;
        problem.dt = 1e-2;
        problem.steps = 500;
        Trajectory traj = integrate(problem);
        double max_err = 0.0;
        for (const auto& s : traj.samples) {
            auto [rx, rp] = analytic_reference(problem, s.t);
            max_err = std::max(max_err, std::abs(s.x - rx));
            max_err = std::max(max_err, std::abs(s.p - rp));
        }
        report.add("free particle follows the straight line", max_err < 1e-10);
    }

    {
        auto max_error_at = [](double dt) {
            FlowProblem problem;
            problem.spec = HamiltonianSpec::harmonic(ScalarExpr::parameter("m"),
                                                     ScalarExpr::parameter("w"));
            problem.bindings = {{"m", 1.0}, {"w", 1.0}};
            problem.q_value = 1.2;
            problem.x0 = 1.0;
            problem.p0 = 0.0;
            problem.dt = dt;
            problem.steps = static_cast<long>(std::lround(5.0 / dt));
            Trajectory traj = integrate(problem);
            double max_err = 0.0;
            for (const auto& s : traj.samples) {
                auto [rx, rp] = analytic_reference(problem, s.t);
                max_err = std::max(max_err, std::abs(s.x - rx));
            }
            return max_err;
        };
        double coarse = max_error_at(0.05);
        double fine = max_error_at(0.025);
        double ratio = coarse / fine;
        std::ostringstream detail;
        detail << "error ratio " << ratio;
        report.add("fourth-order convergence", ratio > 12.0 && ratio < 20.0,
                   detail.str());
    }

    {
        FlowProblem problem;
        problem.spec = HamiltonianSpec::harmonic(ScalarExpr::parameter("m"),
                                                 ScalarExpr::parameter("w"));
        problem.bindings = {{"m", 1.0}, {"w", 1.0}};
        problem.q_value = 1.1;
        problem.x0 = 1.0;
        problem.p0 = 0.0;
        problem.dt = 0.1;
        problem.steps = 7;
        Trajectory traj = integrate(problem);
        std::ostringstream csv;
        write_csv(traj, csv);
        std::istringstream lines(csv.str());
        std::string header;
        std::getline(lines, header);
        int rows = 0;
        for (std::string line; std::getline(lines, line);) ++rows;
        report.add("csv header and row count",
                   header == "t,x,p,H,Eq" && rows == 8);
    }

    return report;
}

// ----------------------------------------------------------- realization --

Report suite_realization(const VerifyOptions& options) {
    Report report;
    report.suite = "realization";
    Rng rng(options.seed + 5);

    absorb(report, verify_relations(options.realization_truncation), "relation: ");

    {
        int pass = 0;
        const int total = 100;
        int degree = std::min(options.max_degree, options.realization_truncation - 2);
        for (int k = 0; k < total; ++k) {
            QPoly f = random_qpoly(rng, degree);
            if (crosscheck_derivative(f, options.realization_truncation).all_pass())
                ++pass;
        }
        report.add("derivative cross-check on random polynomials", pass == total,
                   count_detail(pass, total));
    }

    {
        int pass = 0;
        const int total = 30;
        const int truncation = 10;
        for (int k = 0; k < total; ++k) {
            QPoly f = random_qpoly(rng, 3);
            QPoly g = random_qpoly(rng, 3);
            Op2 lhs = realize_qpoly(f * g, truncation);
            Op2 rhs = realize_qpoly(f, truncation) * realize_qpoly(g, truncation);
            if (!difference_witness(lhs, rhs)) ++pass;
        }
        report.add("realization is multiplicative", pass == total,
                   count_detail(pass, total));
    }

    return report;
}

// ---------------------------------------------------------- quantization --

Report suite_quantization(const VerifyOptions& options) {
    Report report;
    report.suite = "quantization";

    absorb(report, verify_heisenberg(options.quantization_truncation), "identity: ");

    {
        CorrespondenceTable table = correspondence_table(12);
        bool ok = table.rows.size() == 3 && table.rows[0].matches &&
                  table.rows[1].matches && !table.rows[2].matches;
        std::string detail = ok ? table.rows[2].note : "unexpected table shape";
        report.add("bracket-to-commutator substitution table", ok, detail);
    }

    {
        std::string text = heisenberg_equation_text("O", "H");
        report.add("evolution statement carries the explicit-time term",
                   text.find("del(O)/del(t)") != std::string::npos, text);
    }

    return report;
}

// ------------------------------------------------------------ symplectic --

Report suite_symplectic(const VerifyOptions& options) {
    Report report;
    report.suite = "symplectic";
    Rng rng(options.seed + 6);

    {
        Mat2 j = jq();
        bool at1 = j.e[0][0].at_q1().is_zero() && j.e[1][1].at_q1().is_zero() &&
                   j.e[0][1].at_q1() == 1 && j.e[1][0].at_q1() == ScalarExpr(-1);
        report.add("deformed unit reduces to the classical unit", at1);

        const QPoly gens[2] = {QPoly::x(), QPoly::p()};
        bool match = true;
        for (int i = 0; i < 2; ++i)
            for (int jj = 0; jj < 2; ++jj)
                match = match &&
                        qpb_direct(gens[i], gens[jj]) == QPoly(j.e[i][jj]);
        report.add("unit entries equal the generator brackets", match);
    }

    const std::vector<RelationSet>& sets =
        options.relation_sets.empty() ? builtin_relation_sets()
                                      : options.relation_sets;
    const bool builtin = options.relation_sets.empty();

    for (const auto& set : sets) {
        set.validate();
        MatrixCheck ctt = check_ctt(set);
        MatrixCheck inv = check_bracket_invariance(set);
        bool pattern = true;
        for (const auto& entry : inv.entries) {
            for (const auto& other : ctt.entries) {
                if (other.row == entry.col && other.col == entry.row) {
                    pattern = pattern && (entry.pass == other.pass);
                }
            }
        }
        bool coincide = checks_coincide(set) && pattern;
        std::string summary = std::string(ctt.all_pass() ? "passes" : "fails") +
                              " the matrix identity";
        report.add(set.name + ": invariance report mirrors the matrix identity",
                   coincide, summary);
    }

    if (builtin) {
        auto find = [&](const std::string& name) -> const RelationSet& {
            for (const auto& set : sets)
                if (set.name == name) return set;
            throw Error("builtin relation set missing: " + name);
        };

        report.add("resolved candidate satisfies the matrix identity",
                   check_ctt(find("manin-q-det-q")).all_pass() &&
                       check_bracket_invariance(find("manin-q-det-q")).all_pass());

        {
            MatrixCheck nodet = check_ctt(find("manin-q-det-none"));
            bool diag = true, off = false;
            for (const auto& entry : nodet.entries) {
                if (entry.row == entry.col) diag = diag && entry.pass;
                else off = off || entry.pass;
            }
            report.add("missing determinant shows up off the diagonal",
                       diag && !off);
        }

        report.add("mirror convention preserves the plane relation",
                   check_plane(find("manin-qinv-det-qinv")).all_pass() &&
                       !check_ctt(find("manin-qinv-det-qinv")).all_pass());

        report.add("resolved candidate does not preserve the plane relation",
                   !check_plane(find("manin-q-det-q")).all_pass(),
                   "matrix identity and plane preservation pick mirror conventions");

        {
            bool ok = true;
            for (const auto& entry : check_ctt(find("commutative-det")).entries) {
                ok = ok && entry.residual.subst_s(BigRat(1)).is_zero();
            }
            report.add("classical candidate passes at q = 1", ok);
        }

        {
            std::string counterexample;
            bool agree = strategies_agree(find("manin-q-det-q"), 6, &counterexample);
            report.add("resolved candidate rewrites confluently to length 6", agree,
                       agree ? "" : "word " + counterexample);
            bool rest = true;
            for (const char* name :
                 {"manin-qinv-det-qinv", "manin-q-det-none",
                  "manin-sqrtq-det-sqrtq", "commutative-det"}) {
                rest = rest && strategies_agree(find(name), 4, nullptr);
            }
            report.add("consistent candidates rewrite confluently to length 4", rest);
            bool detects = !strategies_agree(find("manin-q-det-1"), 3, &counterexample);
            report.add("undeformed determinant with deformed exchange is inconsistent",
                       detects, detects ? "witness word " + counterexample : "");
        }
    }

    {
        int pass = 0;
        const int total = 200;
        std::uniform_int_distribution<int> num(-5, 5);
        std::uniform_int_distribution<int> den(1, 4);
        auto rat = [&]() { return BigRat(num(rng), den(rng)); };
        for (int k = 0; k < total; ++k) {
            BigRat a = rat();
            if (a == 0) a = 1;
            BigRat b = rat(), c = rat();
            BigRat d = (1 + b * c) / a;  // det = 1 by construction
            QPoly xp = ScalarExpr(a) * QPoly::x() + ScalarExpr(c) * QPoly::p();
            QPoly pp = ScalarExpr(b) * QPoly::x() + ScalarExpr(d) * QPoly::p();
            if (qpb_direct(xp, pp).at_q1() == QPoly(1)) ++pass;
        }
        report.add("random unimodular matrices fix the classical bracket",
                   pass == total, count_detail(pass, total));
    }

    {
        bool ok = true;
        for (const auto& set : sets) {
            RelationSet round = relation_set_from_json(relation_set_to_json(set));
            ok = ok && round.name == set.name && round.rules.size() == set.rules.size();
            for (std::size_t r = 0; ok && r < set.rules.size(); ++r) {
                ok = round.rules[r].lhs == set.rules[r].lhs &&
                     round.rules[r].rhs.size() == set.rules[r].rhs.size();
                for (std::size_t t = 0; ok && t < set.rules[r].rhs.size(); ++t) {
                    ok = round.rules[r].rhs[t].first == set.rules[r].rhs[t].first &&
                         round.rules[r].rhs[t].second == set.rules[r].rhs[t].second;
                }
            }
        }
        report.add("relation sets survive the JSON round trip", ok);
    }

    return report;
}

// ------------------------------------------------------------------ cli --

Report suite_cli(const VerifyOptions& options) {
    Report report;
    report.suite = "cli";
    Rng rng(options.seed + 7);

    auto run_cli = [](const std::vector<std::string>& args, std::string* out_text,
                      std::string* err_text) {
        std::ostringstream out, err;
        int status = cli::run(args, out, err);
        if (out_text) *out_text = out.str();
        if (err_text) *err_text = err.str();
        return status;
    };
    auto one_line = [](std::string text) {
        while (!text.empty() && text.back() == '\n') text.pop_back();
        return text;
    };

    {
        std::string out;
        int status = run_cli({"bracket", "x", "p"}, &out, nullptr);
        report.add("bracket of the generators prints the structure constant",
                   status == 0 && out == "q^(1/2)\n", one_line(out));
    }

    {
        std::string out;
        int status = run_cli({"normalize", "p*x"}, &out, nullptr);
        report.add("normalization orders the exchange product",
                   status == 0 && out == "q*x^1*p^1\n", one_line(out));
    }

    {
        std::string first, second;
        run_cli({"normalize", "(x+p)^3 - q^(1/2)*x*p"}, &first, nullptr);
        run_cli({"normalize", "(x+p)^3 - q^(1/2)*x*p"}, &second, nullptr);
        report.add("identical invocations produce identical bytes",
                   !first.empty() && first == second);
    }

    {
        std::string err;
        int status = run_cli({"frobnicate"}, nullptr, &err);
        report.add("unknown verb exits with usage", status != 0 && !err.empty());
    }

    {
        std::string err;
        int status = run_cli({"normalize", "y + 1"}, nullptr, &err);
        report.add("undeclared identifier is rejected",
                   status != 0 && err.find("undeclared") != std::string::npos);
    }

    {
        int pass = 0;
        const int total = 1000;
        ParseOptions popts;
        popts.parameters = {"m", "w"};
        int degree = std::min(options.max_degree, 6);
        for (int k = 0; k < total; ++k) {
            QPoly f = random_qpoly(rng, degree, true);
            if (parse_qpoly(to_text(f), popts) == f) ++pass;
        }
        report.add("parse of printed polynomial is identity", pass == total,
                   count_detail(pass, total));
    }

    {
        std::string out;
        int status = run_cli({"bracket", "x", "p", "--json"}, &out, nullptr);
        report.add("json output is emitted on request",
                   status == 0 && !out.empty() && out.front() == '{');
    }

    return report;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"cli",          "coeff",       "dynamics",  "flow",
            "qalgebra",     "qcalculus",   "quantization",
            "realization",  "symplectic"};
}

Report verify_suite(const std::string& name, const VerifyOptions& options) {
    if (name == "coeff") return suite_coeff(options);
    if (name == "qalgebra") return suite_qalgebra(options);
    if (name == "qcalculus") return suite_qcalculus(options);
    if (name == "dynamics") return suite_dynamics(options);
    if (name == "flow") return suite_flow(options);
    if (name == "realization") return suite_realization(options);
    if (name == "quantization") return suite_quantization(options);
    if (name == "symplectic") return suite_symplectic(options);
    if (name == "cli") return suite_cli(options);
    throw Error("unknown verification suite: " + name);
}

std::vector<Report> verify_all(const VerifyOptions& options) {
    std::vector<Report> reports;
    for (const auto& name : verify_suite_names()) {
        reports.push_back(verify_suite(name, options));
    }
    std::sort(reports.begin(), reports.end(),
              [](const Report& a, const Report& b) { return a.suite < b.suite; });
    return reports;
}

}  // namespace qmech
