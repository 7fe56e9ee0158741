#include "rmrw/scheme_presets.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rmrw/cw_weak.hpp"
#include "rmrw/example_wom.hpp"
#include "rmrw/hash_wom.hpp"
#include "rmrw/polar.hpp"

namespace rmrw {

namespace {

using nlohmann::json;

std::shared_ptr<const StrongWomCode> strong_ingredient(const json& ing) {
  const std::string id = ing.at("id").get<std::string>();
  if (id == "example3") return std::make_shared<Example3Wom>();
  throw std::invalid_argument("scheme preset: unknown strong ingredient '" + id + "'");
}

std::shared_ptr<const WeakWomCode> weak_ingredient(const json& ing, int q, int z_w, int r) {
  const std::string id = ing.at("id").get<std::string>();
  if (id == "polar-weak") {
    const int n = q * z_w;
    const double w_s = static_cast<double>(r + 1) / q;
    const double w_x = 1.0 / q;
    const double eps_c = ing.at("eps_c").get<double>();
    const double delta = ing.at("delta").get<double>();
    const int trials = ing.value("trials", 20000);
    const std::uint64_t mc_seed = ing.value("mc_seed", std::uint64_t{1});
    const std::uint64_t dither_seed = ing.value("dither_seed", std::uint64_t{2});
    const std::uint64_t enc_seed = ing.value("encode_seed", std::uint64_t{3});

    PolarParams pp;
    const FrozenCacheKey key{n, w_s, w_x, eps_c, trials, mc_seed};
    const std::string cache = ing.value("cache", std::string());
    std::vector<int> frozen;
    if (!cache.empty() && load_frozen_cache(cache, key, frozen)) {
      pp.n = n;
      pp.w_s = w_s;
      pp.w_x = w_x;
      pp.eps_c = eps_c;
      pp.delta = delta;
      pp.frozen = std::move(frozen);
    } else {
      pp = make_polar_params(n, w_s, w_x, eps_c, delta, trials, mc_seed);
      if (!cache.empty()) save_frozen_cache(cache, key, pp.frozen);
    }
    auto inner = std::make_shared<PolarAsConcentrated>(
        std::move(pp), make_dither(n, dither_seed), enc_seed);
    return std::make_shared<ConcentratedToWeak>(inner);
  }
  throw std::invalid_argument("scheme preset: unknown weak ingredient '" + id + "'");
}

std::shared_ptr<const ConcatWomCode> concat_ingredient(const json& ing, int q, int r) {
  const std::string id = ing.at("id").get<std::string>();
  if (id == "hash") {
    ConcatWomParams p;
    p.n = ing.at("n").get<int>();
    p.t1 = ing.value("t1", 1);
    p.t2 = ing.value("t2", 1);
    p.k = ing.at("k").get<int>();
    p.l = ing.value("l", 0);
    p.w_s = static_cast<double>(r + 1) / q;
    p.w_x = 1.0 / q;
    return std::make_shared<HashWomCode>(p);
  }
  throw std::invalid_argument("scheme preset: unknown concatenated ingredient '" + id + "'");
}

std::unique_ptr<RmScheme> from_json(const json& doc) {
  if (doc.value("schema", 1) != 1)
    throw std::invalid_argument("scheme preset: unsupported schema");
  const std::string con = doc.at("construction").get<std::string>();
  if (con == "con1") return std::make_unique<Construction1Scheme>();
  if (con == "uncoded") {
    const int q = doc.at("q").get<int>();
    const int z = doc.at("z").get<int>();
    return std::make_unique<Construction2Scheme>(q, z, q - 1, nullptr);
  }
  const int q = doc.at("q").get<int>();
  const int r = doc.at("r").get<int>();
  if (con == "con2") {
    const int z = doc.at("z").get<int>();
    return std::make_unique<Construction2Scheme>(
        q, z, r, r < q - 1 ? strong_ingredient(doc.at("ingredient")) : nullptr);
  }
  if (con == "con3") {
    const int z_w = doc.at("z_w").get<int>();
    return std::make_unique<Construction3Scheme>(
        q, z_w, r, weak_ingredient(doc.at("ingredient"), q, z_w, r));
  }
  if (con == "con6") {
    const int z_w = doc.at("z_w").get<int>();
    return std::make_unique<Construction6Scheme>(
        q, z_w, r, concat_ingredient(doc.at("ingredient"), q, r));
  }
  throw std::invalid_argument("scheme preset: unknown construction '" + con + "'");
}

}  // namespace

std::unique_ptr<RmScheme> scheme_from_json_text(const std::string& text) {
  return from_json(json::parse(text));
}

std::unique_ptr<RmScheme> load_scheme(const std::string& name_or_path) {
  if (name_or_path == "con1") return std::make_unique<Construction1Scheme>();
  if (name_or_path == "con2-example3")
    return std::make_unique<Construction2Scheme>(3, 2, 1,
                                                 std::make_shared<Example3Wom>());
  if (name_or_path == "uncoded-q3z2")
    return std::make_unique<Construction2Scheme>(3, 2, 2, nullptr);

  std::ifstream in(name_or_path);
  if (!in)
    throw std::invalid_argument("unknown preset and unreadable file: " + name_or_path);
  std::stringstream buf;
  buf << in.rdbuf();
  return scheme_from_json_text(buf.str());
}

}  // namespace rmrw
