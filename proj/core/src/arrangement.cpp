#include "arr/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace arr {

RatVec canonicalize_normal(const RatVec& v) {
  int first = -1;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      first = int(i);
      break;
    }
  }
  if (first < 0) throw std::invalid_argument("hyperplane normal must be nonzero");
  Int den_lcm = 1;
  for (const auto& x : v) den_lcm = lcm(den_lcm, Int(x.get_den()));
  Int num_gcd = 0;
  for (const auto& x : v) num_gcd = gcd(num_gcd, Int(Rat(x * Rat(den_lcm)).get_num()));
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (v[first] < 0) scale = -scale;
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * scale;
  return out;
}

Arrangement::Arrangement(int dim, std::vector<RatVec> normals, std::vector<std::string> labels)
    : dim_(dim) {
  if (dim <= 0) throw std::invalid_argument("ambient dimension must be positive");
  std::unordered_set<std::string> seen;
  for (size_t i = 0; i < normals.size(); ++i) {
    if (int(normals[i].size()) != dim)
      throw std::invalid_argument("normal has wrong length");
    Hyperplane h;
    h.normal = canonicalize_normal(normals[i]);
    if (i < labels.size()) h.label = labels[i];
    if (!seen.insert(vec_str(h.normal)).second) {
      had_duplicates_ = true;
      continue;
    }
    hyperplanes_.push_back(std::move(h));
  }
}

RatMat Arrangement::normal_matrix() const {
  RatMat m(0, dim_);
  for (const auto& h : hyperplanes_) m.append_row(h.normal);
  return m;
}

int Arrangement::rank() const {
  EchelonBasis eb(dim_);
  for (const auto& h : hyperplanes_) eb.insert(h.normal);
  return eb.rank();
}

int Arrangement::find(const RatVec& normal) const {
  RatVec c = canonicalize_normal(normal);
  for (int i = 0; i < size(); ++i)
    if (hyperplanes_[i].normal == c) return i;
  return -1;
}

Arrangement Arrangement::deleted(int index) const {
  std::vector<RatVec> normals;
  std::vector<std::string> labels;
  for (int i = 0; i < size(); ++i) {
    if (i == index) continue;
    normals.push_back(hyperplanes_[i].normal);
    labels.push_back(hyperplanes_[i].label);
  }
  return Arrangement(dim_, std::move(normals), std::move(labels));
}

std::vector<std::string> Arrangement::normal_keys() const {
  std::vector<std::string> keys;
  keys.reserve(hyperplanes_.size());
  for (const auto& h : hyperplanes_) keys.push_back(vec_str(h.normal));
  std::sort(keys.begin(), keys.end());
  return keys;
}

Essentialization essentialize(const Arrangement& a) {
  RatMat span = rref(a.normal_matrix()).matrix;
  const int r = span.rows();
  std::vector<int> pivots(r);
  for (int i = 0; i < r; ++i) {
    int j = 0;
    while (span.at(i, j) == 0) ++j;
    pivots[i] = j;
  }
  std::vector<RatVec> normals;
  std::vector<std::string> labels;
  for (const auto& h : a.hyperplanes()) {
    // coordinates of the normal on the RREF basis: read off at pivot columns
    RatVec c(r);
    for (int i = 0; i < r; ++i) c[i] = h.normal[pivots[i]];
    normals.push_back(std::move(c));
    labels.push_back(h.label);
  }
  return {Arrangement(r, std::move(normals), std::move(labels)), std::move(span)};
}

Arrangement apply_linear_map(const Arrangement& a, const RatMat& m) {
  if (m.rows() != a.dim() || m.cols() != a.dim())
    throw std::invalid_argument("apply_linear_map: matrix size mismatch");
  if (det(m) == 0) throw std::invalid_argument("apply_linear_map: singular matrix");
  std::vector<RatVec> normals;
  std::vector<std::string> labels;
  for (const auto& h : a.hyperplanes()) {
    normals.push_back(vec_mat(h.normal, m));
    labels.push_back(h.label);
  }
  return Arrangement(a.dim(), std::move(normals), std::move(labels));
}

bool is_generic(const Arrangement& a) {
  const int d = a.dim();
  if (a.size() < d + 1) return false;
  std::vector<int> idx(d);
  // iterate over all d-subsets
  for (int i = 0; i < d; ++i) idx[i] = i;
  for (;;) {
    RatMat m(0, d);
    for (int i : idx) m.append_row(a[i].normal);
    if (rank_of(m) < d) return false;
    int k = d - 1;
    while (k >= 0 && idx[k] == a.size() - d + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

namespace {

using nlohmann::json;

Rat rat_from_json(const json& j) {
  if (j.is_string()) return rat_parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw std::invalid_argument("rational entries must be strings or integers");
}

}  // namespace

Arrangement arrangement_from_json_text(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("dim") || !j.contains("hyperplanes"))
    throw std::invalid_argument("arrangement file needs \"dim\" and \"hyperplanes\"");
  int dim = j.at("dim").get<int>();
  std::vector<RatVec> normals;
  std::vector<std::string> labels;
  for (const auto& hj : j.at("hyperplanes")) {
    RatVec n;
    for (const auto& e : hj.at("normal")) n.push_back(rat_from_json(e));
    normals.push_back(std::move(n));
    labels.push_back(hj.value("label", std::string{}));
  }
  return Arrangement(dim, std::move(normals), std::move(labels));
}

std::string arrangement_to_json_text(const Arrangement& a) {
  json j;
  j["dim"] = a.dim();
  json hs = json::array();
  for (const auto& h : a.hyperplanes()) {
    json hj;
    json normal = json::array();
    for (const auto& x : h.normal) normal.push_back(rat_str(x));
    hj["normal"] = normal;
    if (!h.label.empty()) hj["label"] = h.label;
    hs.push_back(hj);
  }
  j["hyperplanes"] = hs;
  return j.dump(2) + "\n";
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return arrangement_from_json_text(ss.str());
}

void save_arrangement(const Arrangement& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << arrangement_to_json_text(a);
}

}  // namespace arr
