#include "flab/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "flab/catalog.hpp"

namespace flab {

using nlohmann::json;

int s_degree(const SubgroupLattice& lat) {
  int degree = 1;
  for (const std::string& l : lat.S().labels()) {
    std::string num;
    for (char c : l + " ") {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        num += c;
      } else if (!num.empty()) {
        degree = std::max(degree, std::stoi(num));
        num.clear();
      }
    }
  }
  return degree;
}

int parse_s_element(const SubgroupLattice& lat, int degree, const std::string& text) {
  const int x = lat.S().find_label(text);
  if (x >= 0) return x;
  const Perm want = Perm::parse_cycles(degree, text);
  const std::string canon = want.is_identity() ? "()" : want.cycles();
  const int y = lat.S().find_label(canon);
  if (y >= 0) return y;
  if (want.is_identity()) return lat.S().identity();
  throw InputError("not an element of S: " + text);
}

FusionSystem fusion_from_json(const json& j) {
  try {
    const int p = j.at("p").get<int>();
    if (!is_prime(p)) throw InputError("p must be prime");
    PermGroup S = PermGroup::from_json(j.at("S"));
    if (!is_p_group(whole_group(S.table()), p)) throw InputError("S is not a p-group");
    auto lat = std::make_shared<SubgroupLattice>(S.table(), p);
    const Group& St = lat->S();
    std::vector<FMap> gens;
    for (const auto& m : j.value("maps", json::array())) {
      const auto src = m.at("src").get<std::vector<std::string>>();
      const auto img = m.at("images").get<std::vector<std::string>>();
      if (src.size() != img.size()) throw InputError("map needs one image per source generator");
      std::vector<int> map(St.order(), -1), done{St.identity()};
      map[St.identity()] = St.identity();
      std::vector<std::pair<int, int>> pairs;
      for (std::size_t i = 0; i < src.size(); ++i)
        pairs.emplace_back(parse_s_element(*lat, S.degree(), src[i]), parse_s_element(*lat, S.degree(), img[i]));
      for (std::size_t i = 0; i < done.size(); ++i)
        for (auto [x, y] : pairs) {
          const int u = St.mul(done[i], x), v = St.mul(map[done[i]], y);
          if (map[u] < 0) {
            map[u] = v;
            done.push_back(u);
          } else if (map[u] != v) {
            throw InputError("declared map is not a homomorphism");
          }
        }
      std::sort(done.begin(), done.end());
      const int P = lat->find(done);
      std::vector<int> im;
      for (int x : (*lat)[P].elems) im.push_back(map[x]);
      FMap f = fmap_from_images(*lat, P, std::move(im));
      if (!fmap_is_hom(*lat, f)) throw InputError("declared map is not injective");
      gens.push_back(std::move(f));
    }
    return FusionSystem::generated(lat, lat->whole(), gens, "abstract");
  } catch (const json::exception& e) {
    throw InputError(std::string("fusion data: ") + e.what());
  }
}

Instance instance_from_json(const json& j, const std::string& fallback_name) {
  Instance inst;
  inst.name = j.value("name", fallback_name);
  if (j.contains("objects")) {
    auto L = std::make_shared<LinkingSystem>(linking_from_data(j));
    inst.p = L->p();
    inst.F = std::make_shared<FusionSystem>(L->fusion());
    inst.L = L;
  } else if (j.contains("maps")) {
    inst.F = std::make_shared<FusionSystem>(fusion_from_json(j));
    inst.p = inst.F->p();
  } else {
    inst.p = j.value("p", 2);
    if (!is_prime(inst.p)) throw InputError("p must be prime");
    auto G = std::make_shared<PermGroup>(PermGroup::from_json(j));
    if (static_cast<std::size_t>(G->order()) > order_bound(10000))
      throw ResourceError("group order " + std::to_string(G->order()) + " exceeds the bound");
    Subgroup S;
    if (j.contains("sylow")) {
      std::vector<Perm> gens;
      for (const auto& g : j.at("sylow")) gens.emplace_back(g.get<std::vector<int>>());
      S = G->subgroup(gens);
    } else {
      S = sylow(G->table(), inst.p);
    }
    auto table = std::make_shared<Group>(G->table());
    inst.F = std::make_shared<FusionSystem>(fusion_from_group(table, S, inst.p));
    inst.ambient = G;
  }
  return inst;
}

Instance load_instance(const std::string& name_or_path) {
  if (const CatalogEntry* e = find_entry(name_or_path)) {
    json j = e->group.is_null() ? e->fusion : e->group;
    j["p"] = e->p;
    Instance inst = instance_from_json(j, e->name);
    inst.name = e->name;
    inst.negative = e->negative;
    return inst;
  }
  std::ifstream in(name_or_path);
  if (!in) throw InputError("no catalog entry or file named '" + name_or_path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw InputError(name_or_path + ": " + ex.what());
  }
  return instance_from_json(j, name_or_path);
}

void ensure_linking(Instance& inst) {
  if (inst.L) return;
  const SaturationReport sat = check_saturation(*inst.F);
  if (!sat.saturated) throw InputError("fusion system is not saturated: " + sat.witness);
  inst.L = std::make_shared<LinkingSystem>(linking_from_group(*inst.F));
}

int parse_subgroup(const SubgroupLattice& lat, const std::string& raw) {
  std::string text = raw;
  text.erase(0, text.find_first_not_of(" \t"));
  text.erase(text.find_last_not_of(" \t") + 1);
  if (text == "S") return lat.whole();
  if (text == "1") return lat.trivial();
  if (!text.empty() && text[0] == '#') {
    const int id = std::stoi(text.substr(1));
    if (id < 0 || id >= lat.count()) throw InputError("no subgroup " + text);
    return id;
  }
  for (int id = 0; id < lat.count(); ++id)
    if (lat.name(id) == text) return id;
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
    // generator list in cycle notation, split at top-level commas
    const int degree = s_degree(lat);
    std::vector<int> gens;
    std::string cur;
    int depth = 0;
    for (char c : text.substr(1, text.size() - 2) + ",") {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        if (!cur.empty()) gens.push_back(parse_s_element(lat, degree, cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    return lat.find(generate(lat.S(), gens));
  }
  throw InputError("cannot read subgroup '" + text + "'");
}

std::vector<int> parse_family(const FusionSystem& F, const std::string& spec) {
  if (spec == "auto" || spec == "complete") return controlling_family(F, true);
  std::string body = spec;
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
  std::vector<int> out;
  std::string cur;
  int depth = 0;
  for (char c : body + ",") {
    if (c == '<' || c == '(') ++depth;
    if (c == '>' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_subgroup(F.lat(), cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (out.empty()) throw InputError("empty family");
  return out;
}

std::string family_string(const SubgroupLattice& lat, const std::vector<int>& family) {
  std::string out = "{";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) out += ", ";
    out += family[i] == lat.whole() ? "S" : lat.name(family[i]);
  }
  return out + "}";
}

}  // namespace flab
