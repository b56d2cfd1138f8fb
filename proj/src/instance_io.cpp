#include "transemi/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "transemi/error.hpp"

namespace transemi {

namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(std::string origin) : origin_(std::move(origin)) {}

  [[noreturn]] void fail(const std::string& pointer, const std::string& msg) const {
    throw InputError(origin_ + ": " + (pointer.empty() ? "/" : pointer) + ": " + msg);
  }

  const json& field(const json& obj, const std::string& pointer, const char* key) const {
    if (!obj.contains(key)) fail(pointer, std::string("missing field \"") + key + "\"");
    return obj.at(key);
  }

  std::uint64_t index(const json& v, const std::string& pointer, std::uint64_t bound) const {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) fail(pointer, "expected a non-negative integer");
    const auto x = v.get<std::uint64_t>();
    if (x >= bound) fail(pointer, "index " + std::to_string(x) + " out of range (< " + std::to_string(bound) + ")");
    return x;
  }

  std::size_t positive(const json& v, const std::string& pointer) const {
    if (!v.is_number_integer() || v.get<std::int64_t>() <= 0) fail(pointer, "expected a positive integer");
    return v.get<std::size_t>();
  }

  const json& array(const json& v, const std::string& pointer) const {
    if (!v.is_array()) fail(pointer, "expected an array");
    return v;
  }

  std::vector<Elem> table(const json& v, const std::string& pointer, std::size_t m) const {
    array(v, pointer);
    if (v.size() != m) fail(pointer, "expected " + std::to_string(m) + " rows");
    std::vector<Elem> out;
    for (std::size_t i = 0; i < m; ++i) {
      const std::string row_ptr = pointer + "/" + std::to_string(i);
      array(v[i], row_ptr);
      if (v[i].size() != m) fail(row_ptr, "expected " + std::to_string(m) + " entries");
      for (std::size_t j = 0; j < m; ++j)
        out.push_back(static_cast<Elem>(index(v[i][j], row_ptr + "/" + std::to_string(j), m)));
    }
    return out;
  }

  BitMatrix relation(const json& v, const std::string& pointer, std::size_t m) const {
    array(v, pointer);
    BitMatrix r(m);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string p = pointer + "/" + std::to_string(i);
      if (!v[i].is_array() || v[i].size() != 2) fail(p, "expected a pair [a, b]");
      r.set(index(v[i][0], p + "/0", m), index(v[i][1], p + "/1", m));
    }
    return r;
  }

 private:
  std::string origin_;
};

}  // namespace

InstanceFile parse_instance_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
  Reader rd(origin);
  if (!doc.is_object()) rd.fail("", "expected an object");

  InstanceFile inst;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) rd.fail("/name", "expected a string");
    inst.name = doc["name"].get<std::string>();
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) rd.fail("/seed", "expected a non-negative integer");
    inst.seed = doc["seed"].get<std::uint64_t>();
  }
  const json& kind = rd.field(doc, "", "kind");
  if (!kind.is_string()) rd.fail("/kind", "expected a string");

  if (kind == "transformations") {
    TransformationsInstance t;
    t.base_size = rd.positive(rd.field(doc, "", "base_size"), "/base_size");
    const json& maps = rd.array(rd.field(doc, "", "maps"), "/maps");
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const std::string mp = "/maps/" + std::to_string(i);
      rd.array(maps[i], mp);
      std::vector<std::pair<PartialMap::Point, PartialMap::Point>> pairs;
      for (std::size_t j = 0; j < maps[i].size(); ++j) {
        const std::string pp = mp + "/" + std::to_string(j);
        if (!maps[i][j].is_array() || maps[i][j].size() != 2) rd.fail(pp, "expected a pair [a, b]");
        pairs.emplace_back(static_cast<PartialMap::Point>(rd.index(maps[i][j][0], pp + "/0", t.base_size)),
                           static_cast<PartialMap::Point>(rd.index(maps[i][j][1], pp + "/1", t.base_size)));
      }
      try {
        t.maps.push_back(PartialMap::from_pairs(t.base_size, pairs));
      } catch (const InputError& e) {
        rd.fail(mp, e.what());
      }
    }
    inst.body = std::move(t);
  } else if (kind == "abstract") {
    const std::size_t m = rd.positive(rd.field(doc, "", "size"), "/size");
    auto mul = rd.table(rd.field(doc, "", "mul"), "/mul", m);
    auto meet = rd.table(rd.field(doc, "", "meet"), "/meet", m);
    auto xi = rd.relation(rd.field(doc, "", "xi"), "/xi", m);
    auto delta = rd.relation(rd.field(doc, "", "delta"), "/delta", m);
    inst.body = AbstractSystem(m, std::move(mul), std::move(meet), std::move(xi), std::move(delta));
  } else {
    rd.fail("/kind", "expected \"transformations\" or \"abstract\"");
  }
  return inst;
}

InstanceFile parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str(), path.string());
}

namespace {

std::string row(std::span<const Elem> xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + "]";
}

std::string pair_list(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::string s = "[";
  for (std::size_t i = 0; i < pairs.size(); ++i)
    s += (i ? ", [" : "[") + std::to_string(pairs[i].first) + ", " + std::to_string(pairs[i].second) + "]";
  return s + "]";
}

std::string table(const std::vector<Elem>& t, std::size_t m) {
  std::string s = "[\n";
  for (std::size_t i = 0; i < m; ++i)
    s += "    " + row(std::span<const Elem>(t).subspan(i * m, m)) + (i + 1 < m ? ",\n" : "\n");
  return s + "  ]";
}

}  // namespace

std::string write_instance_text(const InstanceFile& inst) {
  std::string s = "{\n";
  if (const auto* t = std::get_if<TransformationsInstance>(&inst.body)) {
    s += "  \"kind\": \"transformations\",\n";
    if (!inst.name.empty()) s += "  \"name\": " + json(inst.name).dump() + ",\n";
    if (inst.seed) s += "  \"seed\": " + std::to_string(*inst.seed) + ",\n";
    s += "  \"base_size\": " + std::to_string(t->base_size) + ",\n";
    s += "  \"maps\": [";
    for (std::size_t i = 0; i < t->maps.size(); ++i) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (const auto& [a, b] : t->maps[i].pairs()) pairs.emplace_back(a, b);
      s += (i ? ",\n    " : "\n    ") + pair_list(pairs);
    }
    s += t->maps.empty() ? "]\n" : "\n  ]\n";
  } else {
    const auto& sys = std::get<AbstractSystem>(inst.body);
    s += "  \"kind\": \"abstract\",\n";
    if (!inst.name.empty()) s += "  \"name\": " + json(inst.name).dump() + ",\n";
    if (inst.seed) s += "  \"seed\": " + std::to_string(*inst.seed) + ",\n";
    s += "  \"size\": " + std::to_string(sys.size()) + ",\n";
    s += "  \"mul\": " + table(sys.mul_table(), sys.size()) + ",\n";
    s += "  \"meet\": " + table(sys.meet_table(), sys.size()) + ",\n";
    s += "  \"xi\": " + pair_list(sys.xi_matrix().pairs()) + ",\n";
    s += "  \"delta\": " + pair_list(sys.delta_matrix().pairs()) + "\n";
  }
  return s + "}\n";
}

void write_instance(const InstanceFile& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError(path.string() + ": cannot write");
  out << write_instance_text(inst);
}

}  // namespace transemi
