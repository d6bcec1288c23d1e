#include "hdlab/lattice/serialize.hpp"

#include "hdlab/error.hpp"

namespace hdlab::lattice {

using nlohmann::json;

namespace {

BigInt big_from(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (!j.is_string()) throw InvalidArgument("expected a decimal string");
  BigInt v;
  if (v.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("malformed integer " + j.dump());
  return v;
}

}  // namespace

json to_json(const LatticeFiltration& f) {
  json entries = json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& e = f[i];
    json z = {{"unit", e.z.unit().get_str()}, {"shift", e.z.shift().get_str()}};
    if (e.z.precision()) z["precision"] = e.z.precision()->get_str();
    entries.push_back({{"i", i}, {"a", e.a.get_str()}, {"b", e.b.get_str()}, {"z", std::move(z)}});
  }
  return {{"p", f.p()}, {"entries", std::move(entries)}};
}

LatticeFiltration filtration_from_json(const json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  std::vector<FiltrationEntry> entries;
  for (const auto& e : j.at("entries")) {
    if (e.at("i").get<std::size_t>() != entries.size()) throw InvalidArgument("filtration entries out of order");
    const auto& z = e.at("z");
    std::optional<BigInt> prec;
    if (z.contains("precision")) prec = big_from(z.at("precision"));
    entries.push_back({big_from(e.at("a")), big_from(e.at("b")),
                       ScaledPAdic::from_scaled(p, big_from(z.at("unit")), big_from(z.at("shift")), prec)});
  }
  return LatticeFiltration(p, std::move(entries));
}

json to_json(const Prop34Instance& inst) {
  json pts = json::array();
  for (std::size_t j = 0; j < inst.lambda_points().size(); ++j) {
    const auto& pt = inst.lambda_points()[j];
    pts.push_back({{"j", j}, {"lambda", pt.lambda.get_str()}, {"f", pt.f.get_str()}});
  }
  return {{"p", inst.p()}, {"nu", inst.nu().to_string()}, {"window", inst.window()}, {"lambda_points", pts}};
}

Prop34Instance prop34_from_json(const json& j) {
  std::vector<LambdaPoint> pts;
  for (const auto& pt : j.at("lambda_points")) pts.push_back({big_from(pt.at("lambda")), big_from(pt.at("f"))});
  return Prop34Instance(j.at("p").get<std::uint32_t>(), arith::Rational::parse(j.at("nu").get<std::string>()),
                        std::move(pts), j.at("window").get<std::uint64_t>());
}

}  // namespace hdlab::lattice
