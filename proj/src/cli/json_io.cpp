#include "neuberg/json_io.hpp"

namespace neuberg {

Json document(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

Json to_json(Num a) { return a.value(); }

Json to_json(const Pt& a) { return Json::array({a.x.value(), a.y.value()}); }

Json to_json(const Ln& l) { return Json::array({l.a().value(), l.b().value(), l.c().value()}); }

Json to_json(const ProjPt& P) { return Json::array({P.X().value(), P.Y().value(), P.Z().value()}); }

Json to_json(const ProjLine& l) {
  const auto& v = l.coords();
  return Json::array({v[0].value(), v[1].value(), v[2].value()});
}

Json to_json(const Poly2& f) {
  Json j = Json::object();
  for (const auto& [m, c] : f.terms()) j[monomial_key(m)] = c.value();
  return j;
}

Json to_json(const Circle& c) {
  Json j;
  j["center"] = to_json(c.center);
  j["quadrance"] = to_json(c.quadrance);
  return j;
}

Json to_json(const Tri& t) {
  return Json::array({to_json(t.vertex(0)), to_json(t.vertex(1)), to_json(t.vertex(2))});
}

Json to_json(const DesmicArray& d) {
  Json rows = Json::array();
  for (const auto& row : d.rows) {
    Json r = Json::array();
    for (const ProjPt& P : row) r.push_back(to_json(P));
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

Json triples(const std::vector<CellTriple>& ts) {
  Json out = Json::array();
  for (const CellTriple& t : ts) {
    Json one = Json::array();
    for (const Cell& c : t) one.push_back(Json::array({c.row, c.col}));
    out.push_back(std::move(one));
  }
  return out;
}

}  // namespace

Json to_json(const DesmicReport& r) {
  Json j;
  j["degenerate"] = r.degenerate;
  j["predicted_holding"] = r.predicted_holding;
  j["collinear_count"] = r.collinear_count();
  j["aligned"] = r.aligned();
  j["ok"] = r.ok();
  j["missing"] = triples(r.missing);
  j["extra"] = triples(r.extra);
  j["within_row"] = triples(r.within_row);
  return j;
}

Json to_json(const SweepReport& r) {
  Json primes = Json::array();
  for (const SweepPrime& sp : r.primes) {
    Json jp;
    jp["p"] = sp.p;
    jp["minus3_square"] = sp.minus3_square;
    Json curves = Json::array();
    for (const SweepCurve& c : sp.curves) {
      Json jc;
      jc["a"] = to_json(c.curve.a);
      jc["b"] = to_json(c.curve.b);
      jc["c"] = to_json(c.curve.c);
      jc["pairs_checked"] = c.pairs_checked;
      jc["status_counts"] = {{"disjoint", c.disjoint}, {"intersecting", c.intersecting}};
      jc["disagreements"] = c.disagreements;
      if (c.witness) {
        Json pts = Json::array();
        for (const Pt& P : c.witness->points) pts.push_back(to_json(P));
        jc["witness"] = {{"x0", to_json(c.witness->x0)}, {"x1", to_json(c.witness->x1)}, {"points", pts}};
      } else {
        jc["witness"] = nullptr;
      }
      curves.push_back(std::move(jc));
    }
    jp["curves"] = std::move(curves);
    primes.push_back(std::move(jp));
  }
  return primes;
}

}  // namespace neuberg
