#include "covernum/serialize.hpp"

namespace covernum {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json chromatic_json(const ChromaticWitness& w) {
  Json out;
  out["kind"] = "coloring";
  out["colors"] = w.coloring.colors;
  out["count"] = w.coloring.count;
  out["bound"] = w.bound;
  out["clique"] = vertices_json(w.clique.vertices);
  return out;
}

Json masks_json(const std::vector<VertexMask>& masks) {
  Json out = Json::array();
  for (auto m : masks) out.push_back(vertices_json(m));
  return out;
}

}  // namespace

Json vertices_json(VertexMask mask) {
  Json out = Json::array();
  for_each_vertex(mask, [&](Vertex v) { out.push_back(v); });
  return out;
}

Json to_json(const Coloring& coloring) {
  Json out;
  out["colors"] = coloring.colors;
  out["count"] = coloring.count;
  return out;
}

Json to_json(const ClassWitness& witness) {
  return std::visit(Overloaded{
                        [](const Bipartition& w) {
                          Json out;
                          out["kind"] = "bipartition";
                          out["side"] = vertices_json(w.side);
                          return out;
                        },
                        [](const ChromaticWitness& w) { return chromatic_json(w); },
                        [](const SplitWitness& w) {
                          Json out;
                          if (w.complemented) {
                            out["kind"] = "co-unipolar";
                            out["independent"] = vertices_json(w.clique);
                            out["multipartite"] = masks_json(w.clusters);
                          } else {
                            out["kind"] = "unipolar";
                            out["clique"] = vertices_json(w.clique);
                            out["clusters"] = masks_json(w.clusters);
                          }
                          return out;
                        },
                        [](const PerfectWitness& w) {
                          Json out = chromatic_json(w.chromatic);
                          out["kind"] = "perfect";
                          out["subsets_checked"] = w.subsets_checked;
                          return out;
                        },
                    },
                    witness);
}

Json to_json(const OddHole& hole) {
  Json out;
  out["kind"] = hole.antihole ? "odd-antihole" : "odd-hole";
  out["vertices"] = hole.cycle;
  return out;
}

Json to_json(const CoverCertificate& cert) {
  Json out;
  out["class"] = cert.cls.to_string();
  out["formula"] = cert.claimed_formula;
  Json parts = Json::array();
  for (const auto& part : cert.parts) {
    Json edges = Json::array();
    for (const auto [u, v] : part.edges()) edges.push_back({u, v});
    parts.push_back(std::move(edges));
  }
  out["parts"] = std::move(parts);
  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses) witnesses.push_back(to_json(w));
  out["witnesses"] = std::move(witnesses);
  return out;
}

Json to_json(const SolveResult& result) {
  Json out;
  out["class"] = result.witness.cls.to_string();
  out["value"] = result.value;
  out["certificate"] = to_json(result.witness);
  out["stats"] = {{"nodes", result.stats.nodes},
                  {"family_size", result.stats.family_size},
                  {"membership_tests", result.stats.membership_tests}};
  return out;
}

}  // namespace covernum
