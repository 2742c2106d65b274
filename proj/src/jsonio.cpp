#include "pckit/jsonio.hpp"

#include <sstream>

namespace pckit {

Json ring_to_json(const RingSpec& s) {
  switch (s.kind) {
    case RingKind::Fq: return {{"kind", "Fq"}, {"p", s.p}, {"f", s.f}};
    case RingKind::ZmodPr: return {{"kind", "ZmodPr"}, {"p", s.p}, {"r", s.r}};
    case RingKind::Dual: return {{"kind", "Dual"}, {"p", s.p}, {"f", s.f}};
  }
  return {};
}

RingSpec ring_from_json(const Json& j) {
  require(j.is_object() && j.contains("kind") && j.contains("p"), Err::SchemaError,
          "ring spec needs kind and p");
  std::string kind = j.at("kind").get<std::string>();
  int64_t p = j.at("p").get<int64_t>();
  if (kind == "Fq") return RingSpec::fq(p, j.value("f", 1));
  if (kind == "ZmodPr") return RingSpec::zmod(p, j.at("r").get<int32_t>());
  if (kind == "Dual") return RingSpec::dual(p, j.value("f", 1));
  fail(Err::SchemaError, "unknown ring kind '" + kind + "'");
}

Json elem_to_json(const RingElem& x) {
  if (x.spec.kind == RingKind::ZmodPr) return x.c[0];
  Json arr = Json::array();
  for (int i = 0; i < payload_len(x.spec); ++i) arr.push_back(x.c[static_cast<size_t>(i)]);
  return arr;
}

RingElem elem_from_json(const RingSpec& s, const Json& j) {
  if (j.is_number_integer()) return ring_from_int(s, j.get<int64_t>());
  require(j.is_array(), Err::SchemaError, "ring element must be an integer or payload array");
  require(static_cast<int>(j.size()) <= payload_len(s), Err::SchemaError,
          "payload longer than the ring allows");
  RingElem x = ring_zero(s);
  int64_t m = s.characteristic();
  for (size_t i = 0; i < j.size(); ++i) {
    int64_t v = j[i].get<int64_t>() % m;
    x.c[i] = v < 0 ? v + m : v;
  }
  return x;
}

Json mat_to_json(const Mat& m) {
  Json entries = Json::array();
  for (const RingElem& x : m.e) entries.push_back(elem_to_json(x));
  return {{"ring", ring_to_json(m.ring)}, {"d", m.d}, {"entries", entries}};
}

Mat mat_from_json(const Json& j) {
  RingSpec ring = ring_from_json(j.at("ring"));
  int d = j.at("d").get<int>();
  const Json& entries = j.at("entries");
  require(entries.is_array() && static_cast<int>(entries.size()) == d * d, Err::SchemaError,
          "matrix needs d*d entries");
  Mat m(ring, d);
  for (int i = 0; i < d * d; ++i) m.e[static_cast<size_t>(i)] = elem_from_json(ring, entries[static_cast<size_t>(i)]);
  return m;
}

Mat mat_from_rows_json(const RingSpec& ring, const Json& rows) {
  require(rows.is_array() && !rows.empty(), Err::SchemaError, "matrix must be an array of rows");
  int d = static_cast<int>(rows.size());
  Mat m(ring, d);
  for (int i = 0; i < d; ++i) {
    const Json& row = rows[static_cast<size_t>(i)];
    require(row.is_array() && static_cast<int>(row.size()) == d, Err::SchemaError,
            "matrix rows must have equal length");
    for (int j = 0; j < d; ++j) m.at(i, j) = elem_from_json(ring, row[static_cast<size_t>(j)]);
  }
  return m;
}

Json kind_to_json(const GroupKind& k) {
  return {{"flavor", flavor_name(k.flavor)}, {"n", k.n}};
}

GroupKind kind_from_json(const Json& j) {
  auto fl = flavor_from_name(j.at("flavor").get<std::string>());
  require(fl.has_value(), Err::SchemaError, "unknown flavor");
  return GroupKind::make(*fl, j.at("n").get<int32_t>());
}

Json freehom_to_json(const FreeHom& h) {
  Json images = Json::array();
  for (const Word& w : h.images) images.push_back(word_to_string(w));
  return {{"m", h.m}, {"n", h.n}, {"images", images}};
}

FreeHom freehom_from_json(const Json& j) {
  std::vector<Word> images;
  for (const auto& s : j.at("images")) images.push_back(word_from_string(s.get<std::string>()));
  return free_hom(j.at("m").get<int32_t>(), j.at("n").get<int32_t>(), std::move(images));
}

namespace {

std::string decword_to_string(const std::vector<DecLetter>& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << " ";
    os << w[i].slot;
    if (w[i].dec == Decoration::Inverse) os << "^-1";
    if (w[i].dec == Decoration::Star) os << "^*";
  }
  return os.str();
}

std::vector<DecLetter> decword_from_string(const std::string& s) {
  std::vector<DecLetter> out;
  std::stringstream ss(s);
  std::string tok;
  while (ss >> tok) {
    DecLetter l;
    size_t caret = tok.find('^');
    try {
      l.slot = static_cast<int32_t>(std::stol(tok.substr(0, caret)));
    } catch (...) {
      fail(Err::ParseError, "bad slot in '" + tok + "'");
    }
    if (caret != std::string::npos) {
      std::string suffix = tok.substr(caret + 1);
      if (suffix == "-1")
        l.dec = Decoration::Inverse;
      else if (suffix == "*")
        l.dec = Decoration::Star;
      else
        fail(Err::ParseError, "bad decoration '" + suffix + "'");
    }
    out.push_back(l);
  }
  return out;
}

}  // namespace

Json invariant_to_json(const InvariantSymbol& s) {
  switch (s.kind) {
    case InvKind::SigmaOfWord:
      return {{"sigma", s.i}, {"word", decword_to_string(s.word)}};
    case InvKind::DetInverse: return {{"detinv", s.slot}};
    case InvKind::Similitude: return {{"sim", s.slot}};
    case InvKind::SimilitudeInverse: return {{"siminv", s.slot}};
  }
  return {};
}

InvariantSymbol invariant_from_json(const Json& j) {
  InvariantSymbol s;
  if (j.contains("sigma")) {
    s.kind = InvKind::SigmaOfWord;
    s.i = j.at("sigma").get<int32_t>();
    s.word = decword_from_string(j.at("word").get<std::string>());
    int32_t maxslot = 1;
    for (const DecLetter& l : s.word) maxslot = std::max(maxslot, l.slot);
    s.m = j.value("arity", maxslot);
    return s;
  }
  for (auto [name, kind] : {std::pair<const char*, InvKind>{"detinv", InvKind::DetInverse},
                            {"sim", InvKind::Similitude},
                            {"siminv", InvKind::SimilitudeInverse}})
    if (j.contains(name)) {
      s.kind = kind;
      s.slot = j.at(name).get<int32_t>();
      s.m = j.value("arity", s.slot);
      return s;
    }
  fail(Err::SchemaError, "unrecognized invariant symbol");
}

Json group_to_json(const FiniteGroup& g) {
  return {{"order", g.order()},
          {"table", g.table()},
          {"generators", g.generators()},
          {"name", g.name()}};
}

GroupPtr group_from_json(const Json& j) {
  if (j.contains("builtin")) {
    std::string name = j.at("builtin").get<std::string>();
    if (name == "S_3") return FiniteGroup::symmetric3();
    if (name == "Q_8") return FiniteGroup::quaternion8();
    if (name.rfind("Z/", 0) == 0) return FiniteGroup::cyclic(std::stoi(name.substr(2)));
    fail(Err::SchemaError, "unknown builtin group '" + name + "'");
  }
  if (j.contains("permutations")) {
    std::vector<std::vector<int>> perms = j.at("permutations").get<std::vector<std::vector<int>>>();
    return FiniteGroup::from_permutations(perms, j.value("name", std::string("G")),
                                          j.value("cap", 10000));
  }
  if (j.contains("table")) {
    std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
    std::vector<int> gens = j.value("generators", std::vector<int>{});
    return FiniteGroup::from_table(std::move(table), std::move(gens),
                                   j.value("name", std::string("G")));
  }
  fail(Err::SchemaError, "group needs 'builtin', 'permutations' or 'table'");
}

Json pc_to_json(const PseudoChar& pc) {
  Json fp = Json::array();
  for (size_t e = 0; e < pc.fingerprint.size(); ++e) {
    Json sigmas = Json::array();
    for (const RingElem& x : pc.fingerprint[e]) sigmas.push_back(elem_to_json(x));
    fp.push_back(Json::array({static_cast<int>(e), sigmas}));
  }
  Json out = {{"group_order", pc.group->order()},
              {"kind", kind_to_json(pc.kind)},
              {"ring", ring_to_json(pc.ring)},
              {"fingerprint", fp}};
  if (pc.simtable) {
    Json sims = Json::array();
    for (const RingElem& x : *pc.simtable) sims.push_back(elem_to_json(x));
    out["simtable"] = sims;
  }
  return out;
}

Json rawtable_to_json(const RawTable& t) {
  Json triples = Json::array();
  for (const auto& ref : all_entries(t)) {
    const InvariantSymbol& sym = t.symbols[static_cast<size_t>(ref.m - 1)][static_cast<size_t>(ref.sym)];
    Json tuple = Json::array();
    int64_t code = ref.tc;
    for (int32_t i = 0; i < ref.m; ++i) {
      tuple.push_back(static_cast<int>(code % t.group->order()));
      code /= t.group->order();
    }
    triples.push_back(Json::array(
        {invariant_to_json(sym), tuple, elem_to_json(t.at(ref.m, ref.sym, ref.tc))}));
  }
  return {{"kind", kind_to_json(t.kind)},
          {"ring", ring_to_json(t.ring)},
          {"max_arity", t.M},
          {"word_budget", t.L},
          {"values", triples}};
}

Json gmodule_to_json(const GModule& m) {
  Json action = Json::array();
  for (const Mat& a : m.action) action.push_back(mat_to_json(a));
  return {{"group_order", m.group->order()},
          {"ring", ring_to_json(m.ring)},
          {"dim", m.dim},
          {"action", action}};
}

Json cohomology_to_json(const CohomologyDims& d) {
  return {{"h0", d.h0}, {"h1", d.h1}, {"h2", d.h2}, {"cochain_dims", d.cochain_dims}};
}

}  // namespace pckit
