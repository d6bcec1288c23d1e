#include <random>
#include <set>

#include "hdlab/error.hpp"
#include "hdlab/lattice/apartment.hpp"
#include "hdlab/lattice/cyclic.hpp"
#include "hdlab/lattice/lift.hpp"
#include "hdlab/lattice/prop34.hpp"
#include "scenario_impl.hpp"

namespace hdlab::report::detail {

using arith::BigInt;
using arith::DensityLevel;
using arith::Rational;
using arith::ScaledPAdic;
using lattice::CyclicTarget;
using lattice::LatticeFiltration;
using lattice::LatticeSubgroup;

namespace {

json rat_list(const std::set<Rational>& s) {
  json out = json::array();
  for (const auto& q : s) out.push_back(rat(q));
  return out;
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

BigInt integer_param(const std::string& s, std::uint32_t p) {
  if (s == "p") return BigInt(p);
  return BigInt(s);
}

bool integer_string(const json& v) {
  if (!v.is_string()) return false;
  const auto s = v.get<std::string>();
  if (s == "p") return true;
  if (s.empty()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && s[i] == '-' && s.size() > 1))) return false;
  }
  return true;
}

void integer_list(Validator& v, const json& c, const char* key) {
  const std::string ptr = std::string("/") + key;
  if (!v.require(ptr)) return;
  const auto& a = c.at(key);
  if (!a.is_array()) {
    v.fail(ptr, "expected an array of integer strings");
    return;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!integer_string(a[i])) v.fail(ptr + "/" + std::to_string(i), "expected an integer string or \"p\"");
  }
}

DensityLevel index_level(const LatticeFiltration& f, const LatticeSubgroup& h, std::size_t i) {
  return {i, lattice::lattice_index(h, f.term(i)), f.log_index(i)};
}

}  // namespace

void validate_zp2(Validator& v, const json& c) {
  v.natural("/window", 1, 4096);
  integer_list(v, c, "lambdas");
  integer_list(v, c, "mus");
  if (c.contains("mus") && c.at("mus").is_array()) {
    const auto p = prime_value(c);
    for (std::size_t i = 0; i < c.at("mus").size(); ++i) {
      const auto& m = c.at("mus")[i];
      if (integer_string(m) && m.get<std::string>() != "p") {
        const BigInt mu(m.get<std::string>());
        if (mu != 0 && mpz_divisible_ui_p(mu.get_mpz_t(), p) == 0) {
          v.fail("/mus/" + std::to_string(i), "mu must be divisible by p");
        }
      }
    }
  }
}

void run_zp2(const json& c, RunReport& r) {
  const auto p = prime_value(c);
  const auto window = natural_value(c, "window");
  const auto f = LatticeFiltration::p_power(p, window);
  const Rational half(BigInt(1), BigInt(2));
  std::set<Rational> spectrum;

  auto procyclic = [&](const std::string& label, const CyclicTarget& t) {
    const auto d = lattice::hdim_cyclic(f, t, window);
    bool exact = true;
    for (const auto& lv : d.sequence.levels()) exact = exact && lv.ratio() == half;
    r.add_sequence(label, d.sequence, 0, half);
    r.check(label + " has density exactly 1/2", exact && d.estimate.exact && *d.estimate.exact == half,
            {{"window_min", rat(d.estimate.window_min)}, {"certificate", d.estimate.certificate}});
    spectrum.insert(d.estimate.window_min);
  };
  for (const auto& s : c.at("lambdas")) {
    const auto lambda = integer_param(s.get<std::string>(), p);
    procyclic("<(1," + lambda.get_str() + ")>", CyclicTarget::type_a(ScaledPAdic::from_integer(p, lambda)));
  }
  for (const auto& s : c.at("mus")) {
    const auto mu = integer_param(s.get<std::string>(), p);
    procyclic("<(" + mu.get_str() + ",1)>", CyclicTarget::type_b(ScaledPAdic::from_integer(p, mu)));
  }

  for (const auto& [label, h, expect] :
       {std::tuple{"trivial", LatticeSubgroup::zero(p, 2), Rational(0)},
        std::tuple{"whole", LatticeSubgroup::whole(p, 2), Rational(1)}}) {
    std::vector<DensityLevel> levels;
    bool ok = true;
    for (std::size_t i = 1; i <= window; ++i) {
      levels.push_back(index_level(f, h, i));
      ok = ok && levels.back().ratio() == expect;
    }
    arith::DensitySequence seq(p, std::move(levels));
    r.check(std::string(label) + " subgroup has density " + expect.to_string(), ok);
    spectrum.insert(arith::liminf_estimate(seq, 1).window_min);
    r.add_sequence(label, std::move(seq), 0, expect);
  }
  const std::set<Rational> expected{Rational(0), half, Rational(1)};
  r.check("spectrum is {0, 1/2, 1}", spectrum == expected, {{"spectrum", rat_list(spectrum)}});
}

void validate_apartment(Validator& v, const json& c) {
  const auto xi = v.rational("/xi", 0, 1);
  const auto eta = v.rational("/eta", 0, 1);
  const auto zeta = v.rational("/zeta", 0, 1);
  v.natural("/levels", 6, 4096);
  if (xi && eta && zeta) {
    try {
      lattice::apartment_alternative(*xi, *eta, *zeta);
    } catch (const Error& e) {
      v.fail("/xi", e.what());
    }
  }
  if (!c.contains("reject")) return;
  if (!c.at("reject").is_array()) {
    v.fail("/reject", "expected an array of triples");
    return;
  }
  for (std::size_t i = 0; i < c.at("reject").size(); ++i) {
    const std::string ptr = "/reject/" + std::to_string(i);
    if (!c.at("reject")[i].is_array() || c.at("reject")[i].size() != 3) {
      v.fail(ptr, "expected a triple");
      continue;
    }
    for (int k = 0; k < 3; ++k) v.rational(ptr + "/" + std::to_string(k), 0, 1);
  }
}

void run_apartment(const json& c, RunReport& r) {
  const auto p = prime_value(c);
  const auto xi = rational_value(c.at("xi"));
  const auto eta = rational_value(c.at("eta"));
  const auto zeta = rational_value(c.at("zeta"));
  const auto real = lattice::apartment_realize(xi, eta, zeta, natural_value(c, "levels"), p);
  const auto viol = lattice::validate_filtration(real.filtration);
  r.check("realized filtration is valid", !viol,
          viol ? json{{"index", viol->index}, {"condition", viol->condition}, {"detail", viol->detail}} : json::object());

  const auto spec = lattice::apartment_spectrum(lattice::generator_for(real));
  const std::set<Rational> expected{Rational(0), xi, eta, zeta, Rational(1)};
  r.check("spectrum round-trips exactly", spec.exact && spec.spectrum == expected,
          {{"spectrum", rat_list(spec.spectrum)}, {"expected", rat_list(expected)}, {"note", spec.note}});

  const auto& f = real.filtration;
  const auto last = f.size() - 1;
  r.add_sequence("<(1,0)>", lattice::hdim_cyclic(f, CyclicTarget::type_a(ScaledPAdic::zero(p)), last).sequence);
  r.add_sequence("<(0,1)>", lattice::hdim_cyclic(f, CyclicTarget::type_b(ScaledPAdic::zero(p)), last).sequence);
  r.add_sequence("<(1,1)>",
                 lattice::hdim_cyclic(f, CyclicTarget::type_a(ScaledPAdic::from_integer(p, BigInt(1))), last).sequence);

  if (!c.contains("reject")) return;
  for (const auto& t : c.at("reject")) {
    const Rational a = rational_value(t[0]), b = rational_value(t[1]), z = rational_value(t[2]);
    const std::string label = "(" + a.to_string() + ", " + b.to_string() + ", " + z.to_string() + ")";
    std::string reason;
    bool rejected = false;
    try {
      lattice::apartment_alternative(a, b, z);
    } catch (const InvalidArgument& e) {
      rejected = true;
      reason = e.what();
    }
    bool realize_rejected = false;
    try {
      lattice::apartment_realize(a, b, z, natural_value(c, "levels"), p);
    } catch (const InvalidArgument&) {
      realize_rejected = true;
    }
    r.check("rejects " + label, rejected && realize_rejected, {{"reason", reason}});
  }
}

void validate_prop34(Validator& v, const json& c) {
  const auto p = prime_value(c);
  if (auto nu = v.rational("/nu", 0, 1)) {
    try {
      lattice::check_prop34_nu(p, *nu);
    } catch (const Error& e) {
      v.fail("/nu", e.what());
    }
  }
  v.natural("/window", 1, 2000);
  v.natural("/f_budget", 16, std::uint64_t{1} << 26);
}

void run_prop34(const json& c, RunReport& r) {
  const auto p = prime_value(c);
  const auto nu = rational_value(c.at("nu"));
  const auto window = natural_value(c, "window");
  const auto inst = lattice::prop34_build(p, nu, {natural_value(c, "f_budget"), window});
  const auto seq = inst.density();
  r.add_sequence("r_i", seq, 0, nu);

  const BigInt pp(p);
  const Rational r1 = inst.r(1);
  const Rational closed(BigInt(pp * pp - inst.f(1)), BigInt(pp * (pp + 1)));
  r.check("r_1 = (p^2 - f(1))/(p(p+1))", r1 == closed,
          {{"r_1", rat(r1)}, {"f_1", inst.f(1).get_str()}, {"closed_form", rat(closed)}});
  if (p == 3 && nu == Rational(BigInt(2), BigInt(5))) {
    r.check("r_1 = 5/12", r1 == Rational(BigInt(5), BigInt(12)), {{"r_1", rat(r1)}});
  }

  std::set<BigInt> lambdas;
  json pts = json::array();
  for (std::size_t j = 0; j < inst.lambda_points().size(); ++j) {
    const auto& pt = inst.lambda_points()[j];
    pts.push_back({{"j", j}, {"lambda", pt.lambda.get_str()}, {"f", pt.f.get_str()}});
    lambdas.insert(pt.lambda);
    if (j > 1) continue;
    const Rational rl = inst.r(pt.lambda);
    const BigInt scale = pp + 1;
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), pp.get_mpz_t(), arith::to_u64(pt.lambda));
    const Rational upper = nu + Rational(BigInt(1), BigInt(pw * scale));
    r.check("r at lambda_" + std::to_string(j) + " lies in [nu, nu + 1/(p^lambda (p+1))]", rl >= nu && rl <= upper,
            {{"lambda", pt.lambda.get_str()}, {"r", rat(rl)}, {"upper", rat(upper)}});
  }
  bool off = true;
  json worst = nullptr;
  for (const auto& lv : seq.levels()) {
    if (lambdas.count(BigInt(static_cast<unsigned long>(lv.i)))) continue;
    if (lv.ratio() < nu) {
      off = false;
      worst = {{"i", lv.i}, {"r", rat(lv.ratio())}};
      break;
    }
  }
  r.check("r_i >= nu off the lambda points", off, {{"window", window}, {"lambda_points", pts}, {"first_failure", worst}});

  // Same numbers from the generic procyclic density with the stored approximation
  // of lambda; the level lambda_J itself needs lambda beyond that precision.
  const auto& last_lambda = inst.lambda_points().back().lambda;
  const std::uint64_t cross = std::min<std::uint64_t>(window, arith::to_u64(last_lambda) - 1);
  bool agree = cross >= 1;
  if (agree) {
    const auto f = inst.filtration(cross);
    const auto generic = lattice::hdim_cyclic(f, CyclicTarget::type_a(inst.lambda_approximation()), cross);
    agree = generic.sequence.size() == cross;
    for (std::size_t i = 0; agree && i < cross; ++i) {
      agree = generic.sequence.levels()[i].num == seq.levels()[i].num &&
              generic.sequence.levels()[i].den == seq.levels()[i].den;
    }
  }
  r.check("generic procyclic density agrees level-wise", agree, {{"levels", cross}});
}

void validate_lift(Validator& v, const json& c) {
  validate_prop34(v, c);
  v.natural("/window", 2, 12);
  v.natural("/n", 3, 6);
  v.natural("/samples", 0, 64);
  v.natural("/seed", 0, UINT64_MAX);
}

void run_lift(const json& c, RunReport& r) {
  const auto p = prime_value(c);
  const auto nu = rational_value(c.at("nu"));
  const auto window = natural_value(c, "window");
  const auto n = natural_value(c, "n");
  const auto inst = lattice::prop34_build(p, nu, {natural_value(c, "f_budget"), 0});
  const auto target = inst.filtration(window);

  lattice::IntMatrix phi(2, lattice::IntVector(n, BigInt(0)));
  phi[0][0] = 1;
  phi[1][1] = 1;
  const auto s = lattice::lift_filtration(phi, target, window);

  bool image = true;
  for (bool b : s.image_exact) image = image && b;
  r.check("image condition exact at every level", image, {{"levels", s.image_exact.size()}});

  const auto& kd = s.kernel_density;
  r.add_sequence("kernel", kd, 0, Rational(0));
  bool monotone = true;
  for (std::size_t i = 1; i < kd.size(); ++i) monotone = monotone && kd.levels()[i].ratio() <= kd.levels()[i - 1].ratio();
  const Rational last = kd.back().ratio();
  const Rational tol(BigInt(1), BigInt(50));
  r.check("kernel ratios decrease to at most 0.02", monotone && last < kd.levels().front().ratio() && last <= tol,
          {{"first", rat(kd.levels().front().ratio())}, {"last", rat(last)}, {"last_decimal", last.to_decimal(20)}});

  std::vector<LatticeSubgroup> samples;
  samples.emplace_back(p, n, std::vector<lattice::IntVector>{[&] {
                         lattice::IntVector v(n, BigInt(0));
                         v[0] = 1;
                         v[1] = inst.lambda_points().back().lambda;
                         return v;
                       }()});
  std::mt19937_64 rng(c.at("seed").get<std::uint64_t>());
  const BigInt bound = arith::pow_ui(p, 6);
  for (std::uint64_t k = 0; k < natural_value(c, "samples"); ++k) {
    std::vector<lattice::IntVector> gens(1 + k % 2, lattice::IntVector(n));
    for (auto& g : gens) {
      for (auto& x : g) x = BigInt(static_cast<unsigned long>(rng() % bound.get_ui()));
    }
    samples.emplace_back(p, n, std::move(gens));
  }
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto ld = lattice::lifted_density(s, samples[k]);
    const auto id = lattice::image_density(s, samples[k]);
    const Rational gap = abs(ld.back().ratio() - id.back().ratio());
    const std::string label = "sample " + std::to_string(k);
    r.add_sequence(label + " lifted", ld);
    r.add_sequence(label + " image", id);
    r.check(label + " lifted density within 0.02 of image density", gap <= tol,
            {{"lifted", rat(ld.back().ratio())}, {"image", rat(id.back().ratio())}, {"gap", gap.to_decimal(20)}});
  }
}

}  // namespace hdlab::report::detail
