#include "knotgrid/serialize.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace knotgrid {

using json = nlohmann::json;

namespace {

json dyadic_vec(const DyadicVec3& v) {
  return json::array({v.x.to_decimal(), v.y.to_decimal(), v.z.to_decimal()});
}

DyadicVec3 dyadic_vec_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected [x,y,z] decimal triple");
  return DyadicVec3{Dyadic::parse_decimal(j[0].get<std::string>()),
                    Dyadic::parse_decimal(j[1].get<std::string>()),
                    Dyadic::parse_decimal(j[2].get<std::string>())};
}

json curve_to_json(const PLCurve& curve) {
  json arr = json::array();
  for (const Vec3& v : curve.vertices) arr.push_back(json::array({v.x, v.y, v.z}));
  return arr;
}

PLCurve curve_from_json(const json& arr) {
  PLCurve curve;
  for (const auto& v : arr) {
    if (!v.is_array() || v.size() != 3) throw std::invalid_argument("expected [x,y,z] vertex");
    curve.vertices.push_back({v[0].get<double>(), v[1].get<double>(), v[2].get<double>()});
  }
  return curve;
}

json pd_to_json(const PDCode& pd) {
  json arr = json::array();
  for (const auto& t : pd.crossings) arr.push_back(json::array({t[0], t[1], t[2], t[3]}));
  return arr;
}

PDCode pd_from_json(const json& arr) {
  PDCode pd;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 4) throw std::invalid_argument("expected 4-tuple crossing");
    pd.crossings.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), t[3].get<int>()});
  }
  return pd;
}

}  // namespace

std::string configuration_to_json(const Configuration& config) {
  json root;
  root["rows"] = config.rows;
  root["cols"] = config.cols;
  root["registry"] = {{"bijection", config.registry_bijection},
                      {"family", config.registry_family}};

  json balls = json::array();
  for (const Ball& b : config.balls) {
    const KnotSlot& slot = config.knot_at(b.n, b.k, b.l);
    json jb;
    jb["n"] = b.n;
    jb["k"] = b.k;
    jb["l"] = b.l;
    jb["center"] = dyadic_vec(b.center);
    jb["radius"] = b.radius.to_decimal();
    jb["knot"] = {{"type_index", slot.type.index},
                  {"q", slot.type.braid_parameter},
                  {"pd_code", pd_to_json(slot.pd)},
                  {"curve", curve_to_json(slot.curve)}};
    balls.push_back(std::move(jb));
  }
  root["balls"] = std::move(balls);

  json q_points = json::array();
  for (const DyadicVec3& p : config.pq.q_points) q_points.push_back(dyadic_vec(p));
  json sticks = json::array();
  for (const auto& s : config.pq.sticks) sticks.push_back(s.x.to_decimal());
  root["pq"] = {{"q_points", std::move(q_points)},
                {"sticks", std::move(sticks)},
                {"puncture", json::array({1, 1, 0.5})}};

  return root.dump(2) + "\n";
}

Configuration configuration_from_json(const std::string& text) {
  json root = json::parse(text);
  Configuration config;
  config.rows = root.at("rows").get<std::uint32_t>();
  config.cols = root.at("cols").get<std::uint32_t>();
  config.registry_bijection = root.at("registry").at("bijection").get<std::string>();
  config.registry_family = root.at("registry").at("family").get<std::string>();

  for (const auto& jb : root.at("balls")) {
    Ball b;
    b.n = jb.at("n").get<std::uint32_t>();
    b.k = jb.at("k").get<std::uint32_t>();
    b.l = jb.at("l").get<int>();
    b.center = dyadic_vec_from(jb.at("center"));
    b.radius = Dyadic::parse_decimal(jb.at("radius").get<std::string>());

    KnotSlot slot;
    slot.type.index = jb.at("knot").at("type_index").get<std::uint64_t>();
    slot.type.braid_parameter = jb.at("knot").at("q").get<std::uint64_t>();
    slot.pd = pd_from_json(jb.at("knot").at("pd_code"));
    slot.curve = curve_from_json(jb.at("knot").at("curve"));

    config.knots.emplace(GridIndex{b.n, b.k, b.l}, std::move(slot));
    config.balls.push_back(std::move(b));
  }

  const auto& pq = root.at("pq");
  for (const auto& p : pq.at("q_points")) config.pq.q_points.push_back(dyadic_vec_from(p));
  for (const auto& s : pq.at("sticks")) {
    config.pq.sticks.push_back(PQDescriptor::Stick{Dyadic::parse_decimal(s.get<std::string>())});
  }
  config.pq.puncture = DyadicVec3{Dyadic(1), Dyadic(1), Dyadic::pow2(-1)};
  return config;
}

std::string chain_to_json(const ChainConfiguration& chain) {
  json root;
  root["size"] = chain.size;
  root["order"] = chain.order;
  json intervals = json::array();
  for (const Interval& iv : chain.intervals) {
    intervals.push_back(json::array({iv.lo, iv.hi, iv.den}));
  }
  root["intervals"] = std::move(intervals);
  json chains = json::array();
  for (const auto& parts : chain.chains) {
    json comp = json::array();
    for (const PLCurve& c : parts) comp.push_back(curve_to_json(c));
    chains.push_back(std::move(comp));
  }
  root["chains"] = std::move(chains);
  return root.dump(2) + "\n";
}

ChainConfiguration chain_from_json(const std::string& text) {
  json root = json::parse(text);
  ChainConfiguration chain;
  chain.size = root.at("size").get<std::size_t>();
  chain.order = root.at("order").get<std::vector<int>>();
  for (const auto& iv : root.at("intervals")) {
    chain.intervals.push_back(Interval{iv[0].get<std::int64_t>(), iv[1].get<std::int64_t>(),
                                       iv[2].get<std::int64_t>()});
  }
  for (const auto& comp : root.at("chains")) {
    std::vector<PLCurve> parts;
    for (const auto& c : comp) parts.push_back(curve_from_json(c));
    chain.chains.push_back(std::move(parts));
  }
  return chain;
}

std::string laurent_to_json(const LaurentPolynomial& poly) {
  json obj = json::object();
  for (auto [e, c] : poly.terms()) obj[std::to_string(e)] = c;
  return obj.dump();
}

std::string matching_to_json(const Matching& matching) {
  json root;
  json rho = json::array();
  for (const auto& pair : matching.rho) {
    const auto [n, k, l] = pair.from;
    const auto [pn, pk, pl] = pair.to;
    rho.push_back(json::array({json::array({n, k, l}), json::array({pn, pk, pl})}));
  }
  root["rho"] = std::move(rho);
  json certs = json::array();
  for (const auto& cert : matching.certificates) {
    certs.push_back({{"left_index", cert.left_id.index},
                     {"right_index", cert.right_id.index},
                     {"witness", cert.witness_invariant},
                     {"left_value", cert.left_value},
                     {"right_value", cert.right_value},
                     {"verdict", cert.verdict == InvariantCertificate::Verdict::distinct
                                     ? "distinct"
                                     : "indistinguishable"}});
  }
  root["certificates"] = std::move(certs);
  return root.dump(2) + "\n";
}

BitArray bit_array_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string cleaned;
    for (char ch : line) {
      if (ch == '0' || ch == '1') {
        cleaned.push_back(ch);
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        throw std::invalid_argument("bit_array_from_text: unexpected character '" +
                                    std::string(1, ch) + "'");
      }
    }
    if (!cleaned.empty()) rows.push_back(cleaned);
  }
  if (rows.empty()) throw std::invalid_argument("bit_array_from_text: no rows");
  BitArray out = BitArray::zeros(static_cast<std::uint32_t>(rows.size()),
                                 static_cast<std::uint32_t>(rows.front().size()));
  for (std::uint32_t m = 0; m < out.rows; ++m) {
    if (rows[m].size() != out.cols) {
      throw std::invalid_argument("bit_array_from_text: ragged rows");
    }
    for (std::uint32_t k = 0; k < out.cols; ++k) {
      out.set(m, k, rows[m][k] == '1' ? 1 : 0);
    }
  }
  return out;
}

std::string bit_array_to_text(const BitArray& bits) {
  std::string out;
  for (std::uint32_t m = 0; m < bits.rows; ++m) {
    for (std::uint32_t k = 0; k < bits.cols; ++k) {
      out.push_back(bits.at(m, k) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

CompactSample point_cloud_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CompactSample sample;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char ch : line) {
      if (!std::isspace(static_cast<unsigned char>(ch))) { blank = false; break; }
    }
    if (blank) continue;
    std::istringstream ls(line);
    double x, y, z;
    if (!(ls >> x >> y >> z)) {
      throw std::invalid_argument("point_cloud_from_text: malformed line: " + line);
    }
    sample.points.push_back({x, y, z});
  }
  if (sample.points.empty()) throw std::invalid_argument("point_cloud_from_text: no points");
  sample.resolution = 0.0;
  return sample;
}

namespace {

void append_obj_polyline(std::string& out, const PLCurve& curve, const Vec3& offset,
                         std::size_t& base) {
  char buf[96];
  for (const Vec3& v : curve.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x + offset.x, v.y + offset.y,
                  v.z + offset.z);
    out += buf;
  }
  out += "l";
  for (std::size_t i = 0; i < curve.vertices.size(); ++i) {
    out += " " + std::to_string(base + i + 1);
  }
  out += " " + std::to_string(base + 1) + "\n";
  base += curve.vertices.size();
}

}  // namespace

std::string configuration_to_obj(const Configuration& config) {
  std::string out = "# knotgrid configuration polylines\n";
  std::size_t base = 0;
  for (const auto& [idx, slot] : config.knots) {
    const auto [n, k, l] = idx;
    const Ball& b = config.ball_at(n, k, l);
    const Vec3 center{b.center.x.to_double(), b.center.y.to_double(), b.center.z.to_double()};
    out += "o knot_" + std::to_string(n) + "_" + std::to_string(k) + "_" + std::to_string(l) + "\n";
    append_obj_polyline(out, slot.curve, center, base);
  }
  return out;
}

std::string chain_to_obj(const ChainConfiguration& chain) {
  std::string out = "# knotgrid chain polylines\n";
  std::size_t base = 0;
  for (std::size_t element = 0; element < chain.chains.size(); ++element) {
    out += "o chain_" + std::to_string(element) + "\n";
    for (const PLCurve& part : chain.chains[element]) {
      append_obj_polyline(out, part, Vec3{0, 0, 0}, base);
    }
  }
  return out;
}

}  // namespace knotgrid
