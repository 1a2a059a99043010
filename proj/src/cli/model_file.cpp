#include "eqdc/cli/model_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "eqdc/error.hpp"
#include "eqdc/gstar/weil.hpp"

namespace eqdc::cli {

namespace {

struct Word {
  std::string text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::vector<Word> head;
  std::string value;
  int value_column = 0;
};

struct Section {
  std::string name;
  int number = 0;
  std::vector<Line> lines;
};

bool is_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

// name, name^k or the unit label "1"
bool is_label(const std::string& s) {
  if (s == "1") return true;
  auto caret = s.find('^');
  if (caret == std::string::npos) return is_name(s);
  std::string exp = s.substr(caret + 1);
  return is_name(s.substr(0, caret)) && !exp.empty() &&
         exp.find_first_not_of("0123456789") == std::string::npos;
}

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  SourcePos at(int line, int column) const { return {source_, line, column}; }
  SourcePos at(const Line& l, const Word& w) const { return at(l.number, w.column); }
  SourcePos value_pos(const Line& l) const { return at(l.number, l.value_column); }

  [[noreturn]] void syntax(const SourcePos& p, const std::string& msg) const {
    throw SyntaxError(p.str() + ": " + msg);
  }

  std::vector<Section> split(const std::string& text) const {
    std::vector<Section> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::string body = raw.substr(0, raw.find('#'));
      std::size_t first = body.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      std::size_t last = body.find_last_not_of(" \t");
      if (body[first] == '[') {
        if (body[last] != ']') syntax(at(number, int(last) + 2), "expected ']'");
        std::string name = body.substr(first + 1, last - first - 1);
        out.push_back({name, number, {}});
        continue;
      }
      if (out.empty()) syntax(at(number, int(first) + 1), "expected a section header such as [lie]");
      std::size_t eq = body.find('=');
      if (eq == std::string::npos) syntax(at(number, int(last) + 2), "expected '='");
      Line line;
      line.number = number;
      std::size_t i = 0;
      while (i < eq) {
        if (body[i] == ' ' || body[i] == '\t') {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < eq && body[j] != ' ' && body[j] != '\t') ++j;
        line.head.push_back({body.substr(i, j - i), int(i) + 1});
        i = j;
      }
      if (line.head.empty()) syntax(at(number, int(eq) + 1), "expected a key before '='");
      std::size_t v = body.find_first_not_of(" \t", eq + 1);
      if (v == std::string::npos) {
        line.value_column = int(eq) + 2;
      } else {
        line.value = body.substr(v, last + 1 - v);
        line.value_column = int(v) + 1;
      }
      out.back().lines.push_back(std::move(line));
    }
    return out;
  }

  int integer(const Line& l, const std::string& text, const SourcePos& p, int lo) const {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 6) {
      syntax(p, "expected a non-negative integer, found '" + text + "'");
    }
    int v = std::stoi(text);
    if (v < lo) syntax(p, "expected an integer >= " + std::to_string(lo));
    (void)l;
    return v;
  }

  bool boolean(const Line& l) const {
    if (l.value == "true") return true;
    if (l.value == "false") return false;
    syntax(value_pos(l), "expected 'true' or 'false', found '" + l.value + "'");
  }

  void arity(const Line& l, std::size_t n, const std::string& form) const {
    if (l.head.size() != n) syntax(at(l, l.head[0]), "expected '" + form + "'");
  }

  std::vector<Word> words(const Line& l) const {
    std::vector<Word> out;
    std::size_t i = 0;
    const std::string& s = l.value;
    while (i < s.size()) {
      if (s[i] == ' ' || s[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
      out.push_back({s.substr(i, j - i), l.value_column + int(i)});
      i = j;
    }
    return out;
  }

  // Rejects repeated keys; the key is the whole head.
  void unique(std::set<std::string>& seen, const Line& l) const {
    std::string key;
    for (const auto& w : l.head) key += w.text + " ";
    if (!seen.insert(key).second) syntax(at(l, l.head[0]), "duplicate key '" + key.substr(0, key.size() - 1) + "'");
  }

 private:
  std::string source_;
};

std::string located(const SourcePos& p, const std::string& msg) { return p.str() + ": " + msg; }

// --- [lie] --------------------------------------------------------------

void parse_lie(const Reader& r, const Section& s, ModelFile& f) {
  std::set<std::string> seen;
  std::optional<std::string> name;
  std::vector<std::string> basis;
  std::vector<const Line*> brackets, reps;
  const Line* builtin = nullptr;
  const Line* split = nullptr;
  for (const Line& l : s.lines) {
    r.unique(seen, l);
    const std::string& key = l.head[0].text;
    if (key == "builtin") {
      r.arity(l, 1, "builtin = NAME");
      builtin = &l;
    } else if (key == "name") {
      r.arity(l, 1, "name = NAME");
      if (l.value.empty()) r.syntax(r.value_pos(l), "expected a name");
      name = l.value;
    } else if (key == "basis") {
      r.arity(l, 1, "basis = NAME ...");
      for (const Word& w : r.words(l)) {
        if (!is_name(w.text)) r.syntax(r.at(l.number, w.column), "expected a basis name, found '" + w.text + "'");
        for (const auto& b : basis) {
          if (b == w.text) r.syntax(r.at(l.number, w.column), "duplicate basis name '" + w.text + "'");
        }
        basis.push_back(w.text);
      }
    } else if (key == "bracket") {
      r.arity(l, 3, "bracket X Y = COMBINATION");
      brackets.push_back(&l);
    } else if (key == "rep") {
      r.arity(l, 2, "rep X = ROW; ROW; ...");
      reps.push_back(&l);
    } else if (key == "split") {
      r.arity(l, 1, "split = N");
      split = &l;
    } else {
      r.syntax(r.at(l, l.head[0]), "unknown key '" + key + "' in [lie], expected builtin, name, basis, bracket, rep or split");
    }
  }

  LieAlgebra lie;
  if (builtin) {
    if (name || !basis.empty() || !brackets.empty() || !reps.empty()) {
      r.syntax(r.at(*builtin, builtin->head[0]), "'builtin' cannot be combined with name, basis, bracket or rep");
    }
    try {
      lie = builtin::lie_by_name(builtin->value);
    } catch (const OutOfRange& e) {
      throw OutOfRange(located(r.value_pos(*builtin), "unknown Lie algebra '" + builtin->value + "'"));
    }
    f.lie_builtin = builtin->value;
  } else {
    if (!name) r.syntax(r.at(s.number, 1), "[lie] needs 'name' and 'basis' or 'builtin'");
    if (basis.empty()) r.syntax(r.at(s.number, 1), "[lie] needs a non-empty 'basis'");
    lie = LieAlgebra(*name, basis);
    auto index = [&](const Line& l, const Word& w) {
      auto i = lie.find(w.text);
      if (!i) throw UnknownGenerator(located(r.at(l, w), "unknown basis vector '" + w.text + "'"));
      return *i;
    };
    for (const Line* l : brackets) {
      std::size_t b = index(*l, l->head[1]);
      std::size_t c = index(*l, l->head[2]);
      if (b == c) r.syntax(r.at(*l, l->head[2]), "a bracket needs two different basis vectors");
      RationalVector v(lie.dim(), Rational(0));
      for (const auto& t : parse_combination(l->value, r.value_pos(*l))) {
        auto a = lie.find(t.label);
        if (!a) throw UnknownGenerator(located(t.pos, "unknown basis vector '" + t.label + "'"));
        v[*a] += t.coefficient;
      }
      for (std::size_t a = 0; a < lie.dim(); ++a) {
        if (lie.structure(a, b, c) != 0) r.syntax(r.at(*l, l->head[0]), "bracket declared twice");
      }
      lie.set_bracket(b, c, v);
    }
    if (!reps.empty()) {
      std::vector<std::optional<GaussMatrix>> mats(lie.dim());
      std::size_t size = 0;
      for (const Line* l : reps) {
        std::size_t a = index(*l, l->head[1]);
        GaussMatrix m;
        std::size_t start = 0;
        const std::string& v = l->value;
        while (start <= v.size()) {
          std::size_t end = v.find(';', start);
          if (end == std::string::npos) end = v.size();
          std::vector<GaussRational> row;
          std::size_t e0 = start;
          while (e0 <= end) {
            std::size_t e1 = v.find(',', e0);
            if (e1 == std::string::npos || e1 > end) e1 = end;
            std::string entry = v.substr(e0, e1 - e0);
            std::size_t a0 = entry.find_first_not_of(" \t");
            std::size_t a1 = entry.find_last_not_of(" \t");
            SourcePos p = r.at(l->number, l->value_column + int(e0 + (a0 == std::string::npos ? 0 : a0)));
            if (a0 == std::string::npos) r.syntax(p, "expected a matrix entry");
            try {
              row.push_back(parse_gauss(entry.substr(a0, a1 - a0 + 1)));
            } catch (const std::invalid_argument&) {
              r.syntax(p, "expected a number such as 1/2 or -1/2i, found '" + entry.substr(a0, a1 - a0 + 1) + "'");
            }
            e0 = e1 + 1;
          }
          m.push_back(std::move(row));
          start = end + 1;
        }
        for (const auto& row : m) {
          if (row.size() != m.size()) r.syntax(r.value_pos(*l), "representation matrix must be square");
        }
        if (size != 0 && m.size() != size) r.syntax(r.value_pos(*l), "representation matrices differ in size");
        size = m.size();
        mats[a] = std::move(m);
      }
      std::vector<GaussMatrix> all;
      for (std::size_t a = 0; a < lie.dim(); ++a) {
        if (!mats[a]) r.syntax(r.at(s.number, 1), "missing 'rep " + lie.basis()[a] + "'");
        all.push_back(*mats[a]);
      }
      lie.set_rep(std::move(all));
    }
  }
  require_valid(lie);
  if (split) {
    f.split = std::size_t(r.integer(*split, split->value, r.value_pos(*split), 1));
    if (f.split >= lie.dim()) r.syntax(r.value_pos(*split), "split must leave a non-empty second summand");
    for (std::size_t a = 0; a < lie.dim(); ++a) {
      for (std::size_t b = 0; b < f.split; ++b) {
        for (std::size_t c = f.split; c < lie.dim(); ++c) {
          if (lie.structure(a, b, c) != 0) {
            throw InvalidLieAlgebra(located(r.value_pos(*split), "[" + lie.basis()[b] + ", " + lie.basis()[c] +
                                                                        "] != 0, so the split is not a direct sum"));
          }
        }
      }
    }
  }
  f.lie = std::move(lie);
  // both slices must be subalgebras
  if (f.split) {
    f.g();
    f.k();
  }
}

// --- [algebra] ----------------------------------------------------------

Element parse_homogeneous(const Reader& r, const Line& l, const AlgebraPtr& alg, int degree) {
  Element e = parse_element(l.value, alg, r.value_pos(l));
  bool ok;
  try {
    ok = e.is_zero() || e.degree() == degree;
  } catch (const DegreeMismatch&) {
    ok = false;
  }
  if (!ok) {
    throw DegreeMismatch(located(r.value_pos(l), "expected an element of degree " + std::to_string(degree) +
                                                     ", found '" + e.to_string() + "'"));
  }
  return e;
}

void parse_algebra(const Reader& r, const Section& s, ModelFile& f) {
  if (!f.lie) r.syntax(r.at(s.number, 1), "[algebra] needs a preceding [lie] section");
  const LieAlgebra& lie = *f.lie;
  std::set<std::string> seen;
  std::vector<const Line*> ds, iotas;
  for (const Line& l : s.lines) {
    r.unique(seen, l);
    const std::string& key = l.head[0].text;
    if (key == "weil") {
      r.arity(l, 1, "weil = true");
      f.weil = r.boolean(l);
    } else if (key == "generator") {
      r.arity(l, 2, "generator NAME = DEGREE");
      const Word& w = l.head[1];
      if (!is_name(w.text)) r.syntax(r.at(l, w), "expected a generator name, found '" + w.text + "'");
      f.generators.push_back({w.text, r.integer(l, l.value, r.value_pos(l), 1), std::nullopt, 0});
    } else if (key == "d") {
      r.arity(l, 2, "d NAME = ELEMENT");
      ds.push_back(&l);
    } else if (key == "iota") {
      r.arity(l, 3, "iota BASIS NAME = ELEMENT");
      iotas.push_back(&l);
    } else {
      r.syntax(r.at(l, l.head[0]), "unknown key '" + key + "' in [algebra], expected weil, generator, d or iota");
    }
  }
  AlgebraPtr alg = GradedAlgebra::make(f.generators);
  auto gen = [&](const Line& l, const Word& w) {
    auto i = alg->find(w.text);
    if (!i) throw UnknownGenerator(located(r.at(l, w), "unknown generator '" + w.text + "'"));
    return *i;
  };
  std::vector<Element> d(alg->size(), Element(alg));
  for (const Line* l : ds) {
    std::size_t i = gen(*l, l->head[1]);
    d[i] = parse_homogeneous(r, *l, alg, alg->generator(i).degree + 1);
  }
  std::vector<std::vector<Element>> iota(lie.dim(), std::vector<Element>(alg->size(), Element(alg)));
  for (const Line* l : iotas) {
    auto a = lie.find(l->head[1].text);
    if (!a) throw UnknownGenerator(located(r.at(*l, l->head[1]), "unknown basis vector '" + l->head[1].text + "'"));
    std::size_t i = gen(*l, l->head[2]);
    iota[*a][i] = parse_homogeneous(r, *l, alg, alg->generator(i).degree - 1);
  }
  std::vector<Derivation> iota_ders;
  for (auto& images : iota) iota_ders.emplace_back(alg, -1, std::move(images));
  f.explicit_algebra = GStarAlgebra::make(alg, lie, Derivation(alg, 1, std::move(d)), std::move(iota_ders));
  if (!f.weil) {
    f.gstar = f.explicit_algebra;
  } else if (f.generators.empty()) {
    f.gstar = build_weil(lie).gstar;
  } else {
    f.gstar = weil_model(*f.explicit_algebra).total;
  }
}

// --- [connection] -------------------------------------------------------

void parse_connection(const Reader& r, const Section& s, ModelFile& f) {
  if (!f.gstar) r.syntax(r.at(s.number, 1), "[connection] needs a preceding [algebra] section");
  LieAlgebra k = f.split ? f.k() : *f.lie;
  std::vector<std::optional<Element>> comps(k.dim());
  for (const Line& l : s.lines) {
    r.arity(l, 1, "BASIS = ELEMENT");
    auto a = k.find(l.head[0].text);
    if (!a) throw UnknownGenerator(located(r.at(l, l.head[0]), "unknown basis vector '" + l.head[0].text + "' of " + k.name()));
    if (comps[*a]) r.syntax(r.at(l, l.head[0]), "duplicate key '" + l.head[0].text + "'");
    comps[*a] = parse_homogeneous(r, l, f.gstar->carrier, 1);
  }
  std::vector<Element> out;
  for (std::size_t a = 0; a < k.dim(); ++a) {
    if (!comps[a]) r.syntax(r.at(s.number, 1), "missing connection component '" + k.basis()[a] + "'");
    out.push_back(*comps[a]);
  }
  f.connection = std::move(out);
}

// --- [model] ------------------------------------------------------------

struct LabelIndex {
  std::map<std::string, std::pair<int, std::size_t>> where;  // label -> (degree, slot)

  std::pair<int, std::size_t> find(const std::string& label, const SourcePos& p, const std::string& kind) const {
    auto it = where.find(label);
    if (it == where.end()) throw UnknownGenerator(located(p, "unknown " + kind + " label '" + label + "'"));
    return it->second;
  }
};

void parse_model_section(const Reader& r, const Section& s, ModelFile& f) {
  std::set<std::string> seen;
  const Line* builtin = nullptr;
  const Line* top = nullptr;
  std::optional<std::string> name;
  bool exact = false;
  bool products = false;
  std::vector<const Line*> cochains, forms, deltas, dforms, js, cups, wedges;
  for (const Line& l : s.lines) {
    r.unique(seen, l);
    const std::string& key = l.head[0].text;
    if (key == "builtin") {
      r.arity(l, 1, "builtin = NAME");
      builtin = &l;
    } else if (key == "name") {
      r.arity(l, 1, "name = NAME");
      if (!is_name(l.value)) r.syntax(r.value_pos(l), "expected a model name");
      name = l.value;
    } else if (key == "top") {
      r.arity(l, 1, "top = N");
      top = &l;
    } else if (key == "exact") {
      r.arity(l, 1, "exact = BOOL");
      exact = r.boolean(l);
    } else if (key == "products") {
      r.arity(l, 1, "products = BOOL");
      products = r.boolean(l);
    } else if (key == "cochains" || key == "forms") {
      r.arity(l, 2, key + " N = LABEL ...");
      (key == "cochains" ? cochains : forms).push_back(&l);
    } else if (key == "delta" || key == "dforms" || key == "j") {
      r.arity(l, 2, key + " LABEL = COMBINATION");
      (key == "delta" ? deltas : key == "dforms" ? dforms : js).push_back(&l);
    } else if (key == "cup" || key == "wedge") {
      r.arity(l, 3, key + " LABEL LABEL = COMBINATION");
      (key == "cup" ? cups : wedges).push_back(&l);
    } else {
      r.syntax(r.at(l, l.head[0]), "unknown key '" + key +
                                       "' in [model], expected builtin, name, top, exact, products, cochains, "
                                       "forms, delta, dforms, j, cup or wedge");
    }
  }
  if (builtin) {
    if (seen.size() != 1) r.syntax(r.at(*builtin, builtin->head[0]), "'builtin' cannot be combined with other keys");
    try {
      f.model = builtin::model_by_name(builtin->value);
    } catch (const OutOfRange&) {
      throw OutOfRange(located(r.value_pos(*builtin), "unknown model '" + builtin->value + "'"));
    }
    f.model_builtin = builtin->value;
    return;
  }
  if (!name || !top) r.syntax(r.at(s.number, 1), "[model] needs 'builtin' or 'name' and 'top'");
  GeometricModel m;
  m.name = *name;
  m.exact = exact;
  m.top_degree = r.integer(*top, top->value, r.value_pos(*top), 0);
  const auto slots = std::size_t(m.top_degree) + 1;
  m.cochain_rank.assign(slots, 0);
  m.form_dim.assign(slots, 0);
  m.cochain_labels.assign(slots, {});
  m.form_labels.assign(slots, {});

  auto declare = [&](const std::vector<const Line*>& lines, LabelIndex& index,
                     std::vector<std::vector<std::string>>& labels, std::vector<std::size_t>& sizes) {
    for (const Line* l : lines) {
      const Word& w = l->head[1];
      int n = r.integer(*l, w.text, r.at(*l, w), 0);
      if (n > m.top_degree) r.syntax(r.at(*l, w), "degree " + w.text + " exceeds top = " + std::to_string(m.top_degree));
      for (const Word& lw : r.words(*l)) {
        if (!is_label(lw.text)) r.syntax(r.at(l->number, lw.column), "expected a label, found '" + lw.text + "'");
        if (!index.where.emplace(lw.text, std::pair{n, labels[std::size_t(n)].size()}).second) {
          r.syntax(r.at(l->number, lw.column), "duplicate label '" + lw.text + "'");
        }
        labels[std::size_t(n)].push_back(lw.text);
      }
      sizes[std::size_t(n)] = labels[std::size_t(n)].size();
    }
  };
  LabelIndex cl, fl;
  declare(cochains, cl, m.cochain_labels, m.cochain_rank);
  declare(forms, fl, m.form_labels, m.form_dim);

  for (int n = 0; n < m.top_degree; ++n) {
    m.delta.emplace_back(m.rank(n + 1), m.rank(n));
    m.d_forms.emplace_back(m.forms(n + 1), m.forms(n));
  }
  for (int n = 0; n <= m.top_degree; ++n) m.j.emplace_back(m.rank(n), m.forms(n));

  // Combination over labels of `index` that must all have degree `degree`.
  auto combination = [&](const Line& l, const LabelIndex& index, const std::string& kind, int degree,
                         std::size_t size, bool integral) {
    RationalVector v(size, Rational(0));
    for (const auto& t : parse_combination(l.value, r.value_pos(l))) {
      auto [n, slot] = index.find(t.label, t.pos, kind);
      if (n != degree) {
        throw DegreeMismatch(located(t.pos, "'" + t.label + "' has degree " + std::to_string(n) + ", expected " +
                                                std::to_string(degree)));
      }
      if (integral && !is_integer(t.coefficient)) r.syntax(t.coefficient_pos, "expected an integer coefficient");
      v[slot] += t.coefficient;
    }
    return v;
  };
  for (const Line* l : deltas) {
    auto [n, slot] = cl.find(l->head[1].text, r.at(*l, l->head[1]), "cochain");
    RationalVector v = combination(*l, cl, "cochain", n + 1, m.rank(n + 1), true);
    if (n == m.top_degree && !is_zero(v)) r.syntax(r.value_pos(*l), "delta leaves the top degree");
    for (std::size_t i = 0; i < v.size(); ++i) m.delta[std::size_t(n)](i, slot) = Integer(v[i]);
  }
  for (const Line* l : dforms) {
    auto [n, slot] = fl.find(l->head[1].text, r.at(*l, l->head[1]), "form");
    RationalVector v = combination(*l, fl, "form", n + 1, m.forms(n + 1), false);
    if (n == m.top_degree && !is_zero(v)) r.syntax(r.value_pos(*l), "d leaves the top degree");
    for (std::size_t i = 0; i < v.size(); ++i) m.d_forms[std::size_t(n)].set(i, slot, v[i]);
  }
  for (const Line* l : js) {
    auto [n, slot] = fl.find(l->head[1].text, r.at(*l, l->head[1]), "form");
    RationalVector v = combination(*l, cl, "cochain", n, m.rank(n), false);
    for (std::size_t i = 0; i < v.size(); ++i) m.j[std::size_t(n)].set(i, slot, v[i]);
  }
  if (!products && !(cups.empty() && wedges.empty())) {
    const Line* l = cups.empty() ? wedges.front() : cups.front();
    r.syntax(r.at(*l, l->head[0]), "cup and wedge tables need 'products = true'");
  }
  if (products) {
    for (int p = 0; p <= m.top_degree; ++p) {
      for (int q = 0; p + q <= m.top_degree; ++q) {
        m.cup[{p, q}].assign(m.rank(p), std::vector<IntegerVector>(m.rank(q), IntegerVector(m.rank(p + q), Integer(0))));
        m.wedge[{p, q}].assign(m.forms(p), std::vector<RationalVector>(m.forms(q), RationalVector(m.forms(p + q), Rational(0))));
      }
    }
    auto table_entry = [&](const Line& l, const LabelIndex& index, const std::string& kind) {
      auto a = index.find(l.head[1].text, r.at(l, l.head[1]), kind);
      auto b = index.find(l.head[2].text, r.at(l, l.head[2]), kind);
      if (a.first + b.first > m.top_degree) {
        r.syntax(r.at(l, l.head[0]), "product lands above top = " + std::to_string(m.top_degree));
      }
      return std::pair{a, b};
    };
    for (const Line* l : cups) {
      auto [a, b] = table_entry(*l, cl, "cochain");
      RationalVector v = combination(*l, cl, "cochain", a.first + b.first, m.rank(a.first + b.first), true);
      m.cup[{a.first, b.first}][a.second][b.second] = to_integer(v);
    }
    for (const Line* l : wedges) {
      auto [a, b] = table_entry(*l, fl, "form");
      m.wedge[{a.first, b.first}][a.second][b.second] =
          combination(*l, fl, "form", a.first + b.first, m.forms(a.first + b.first), false);
    }
  }
  validate_model(m);
  f.model = std::move(m);
}

// --- [task] -------------------------------------------------------------

void parse_task(const Reader& r, const Section& s, ModelFile& f) {
  static const std::set<std::string> keys = {"command", "degree", "max-degree", "poly", "coeff"};
  for (const Line& l : s.lines) {
    r.arity(l, 1, "KEY = VALUE");
    const std::string& key = l.head[0].text;
    if (!keys.count(key)) {
      r.syntax(r.at(l, l.head[0]), "unknown key '" + key + "' in [task], expected command, degree, max-degree, poly or coeff");
    }
    if (l.value.empty()) r.syntax(r.value_pos(l), "expected a value");
    if (!f.task.emplace(key, l.value).second) r.syntax(r.at(l, l.head[0]), "duplicate key '" + key + "'");
  }
}

// --- printing -----------------------------------------------------------

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

void print_lie(std::ostream& out, const ModelFile& f, bool expand) {
  const LieAlgebra& lie = *f.lie;
  out << "[lie]\n";
  if (f.lie_builtin && !expand) {
    out << "builtin = " << *f.lie_builtin << "\n";
  } else {
    out << "name = " << lie.name() << "\n";
    out << "basis = " << join(lie.basis(), " ") << "\n";
    for (std::size_t b = 0; b < lie.dim(); ++b) {
      for (std::size_t c = b + 1; c < lie.dim(); ++c) {
        RationalVector v(lie.dim());
        for (std::size_t a = 0; a < lie.dim(); ++a) v[a] = lie.structure(a, b, c);
        if (is_zero(v)) continue;
        out << "bracket " << lie.basis()[b] << " " << lie.basis()[c] << " = " << format_combination(v, lie.basis())
            << "\n";
      }
    }
    if (lie.rep()) {
      for (std::size_t a = 0; a < lie.dim(); ++a) {
        std::vector<std::string> rows;
        for (const auto& row : (*lie.rep())[a]) {
          std::vector<std::string> entries;
          for (const auto& z : row) entries.push_back(to_string(z));
          rows.push_back(join(entries, ", "));
        }
        out << "rep " << lie.basis()[a] << " = " << join(rows, "; ") << "\n";
      }
    }
  }
  if (f.split) out << "split = " << f.split << "\n";
}

void print_algebra(std::ostream& out, const ModelFile& f) {
  const GStarAlgebra& a = *f.explicit_algebra;
  out << "[algebra]\n";
  if (f.weil) out << "weil = true\n";
  for (const auto& g : f.generators) out << "generator " << g.name << " = " << g.degree << "\n";
  for (std::size_t i = 0; i < a.carrier->size(); ++i) {
    if (!a.d.image(i).is_zero()) out << "d " << a.carrier->generator(i).name << " = " << a.d.image(i).to_string() << "\n";
  }
  for (std::size_t b = 0; b < a.lie.dim(); ++b) {
    for (std::size_t i = 0; i < a.carrier->size(); ++i) {
      const Element& e = a.iota[b].image(i);
      if (!e.is_zero()) {
        out << "iota " << a.lie.basis()[b] << " " << a.carrier->generator(i).name << " = " << e.to_string() << "\n";
      }
    }
  }
}

void print_geometric(std::ostream& out, const GeometricModel& m) {
  out << "name = " << m.name << "\n";
  out << "top = " << m.top_degree << "\n";
  if (m.exact) out << "exact = true\n";
  if (!m.cup.empty()) out << "products = true\n";
  for (int n = 0; n <= m.top_degree; ++n) {
    if (m.rank(n)) out << "cochains " << n << " = " << join(m.cochain_labels[std::size_t(n)], " ") << "\n";
  }
  for (int n = 0; n <= m.top_degree; ++n) {
    if (m.forms(n)) out << "forms " << n << " = " << join(m.form_labels[std::size_t(n)], " ") << "\n";
  }
  for (int n = 0; n < m.top_degree; ++n) {
    for (std::size_t i = 0; i < m.rank(n); ++i) {
      RationalVector v = to_rational(m.delta[std::size_t(n)].column(i));
      if (!is_zero(v)) {
        out << "delta " << m.cochain_labels[std::size_t(n)][i] << " = "
            << format_combination(v, m.cochain_labels[std::size_t(n + 1)]) << "\n";
      }
    }
  }
  for (int n = 0; n < m.top_degree; ++n) {
    for (std::size_t i = 0; i < m.forms(n); ++i) {
      RationalVector v = m.d_forms[std::size_t(n)].column(i);
      if (!is_zero(v)) {
        out << "dforms " << m.form_labels[std::size_t(n)][i] << " = "
            << format_combination(v, m.form_labels[std::size_t(n + 1)]) << "\n";
      }
    }
  }
  for (int n = 0; n <= m.top_degree; ++n) {
    for (std::size_t i = 0; i < m.forms(n); ++i) {
      RationalVector v = m.j[std::size_t(n)].column(i);
      if (!is_zero(v)) {
        out << "j " << m.form_labels[std::size_t(n)][i] << " = " << format_combination(v, m.cochain_labels[std::size_t(n)])
            << "\n";
      }
    }
  }
  for (const auto& [pq, table] : m.cup) {
    for (std::size_t a = 0; a < table.size(); ++a) {
      for (std::size_t b = 0; b < table[a].size(); ++b) {
        RationalVector v = to_rational(table[a][b]);
        if (is_zero(v)) continue;
        out << "cup " << m.cochain_labels[std::size_t(pq.first)][a] << " " << m.cochain_labels[std::size_t(pq.second)][b]
            << " = " << format_combination(v, m.cochain_labels[std::size_t(pq.first + pq.second)]) << "\n";
      }
    }
  }
  for (const auto& [pq, table] : m.wedge) {
    for (std::size_t a = 0; a < table.size(); ++a) {
      for (std::size_t b = 0; b < table[a].size(); ++b) {
        if (is_zero(table[a][b])) continue;
        out << "wedge " << m.form_labels[std::size_t(pq.first)][a] << " " << m.form_labels[std::size_t(pq.second)][b]
            << " = " << format_combination(table[a][b], m.form_labels[std::size_t(pq.first + pq.second)]) << "\n";
      }
    }
  }
}

bool same_gstar(const GStarAlgebra& a, const GStarAlgebra& b) {
  return a.carrier->same_structure(*b.carrier) && a.lie == b.lie && a.d == b.d && a.iota == b.iota;
}

}  // namespace

LieAlgebra lie_slice(const LieAlgebra& lie, std::size_t begin, std::size_t end, const std::string& name) {
  std::vector<std::string> basis(lie.basis().begin() + long(begin), lie.basis().begin() + long(end));
  LieAlgebra out(name, basis);
  for (std::size_t a = 0; a < lie.dim(); ++a) {
    for (std::size_t b = begin; b < end; ++b) {
      for (std::size_t c = begin; c < end; ++c) {
        const Rational& v = lie.structure(a, b, c);
        if (v == 0) continue;
        if (a < begin || a >= end) {
          throw InvalidLieAlgebra("[" + lie.basis()[b] + ", " + lie.basis()[c] + "] leaves the span of " + name);
        }
        out.set_structure(a - begin, b - begin, c - begin, v);
      }
    }
  }
  return out;
}

LieAlgebra ModelFile::g() const {
  if (!split) return *lie;
  auto plus = lie->name().find('+');
  std::string name = plus == std::string::npos ? lie->name() + "_g" : lie->name().substr(0, plus);
  return lie_slice(*lie, 0, split, name);
}

LieAlgebra ModelFile::k() const {
  if (!split) throw OutOfRange("the Lie algebra has no split into g + k");
  auto plus = lie->name().find('+');
  std::string name = plus == std::string::npos ? lie->name() + "_k" : lie->name().substr(plus + 1);
  return lie_slice(*lie, split, lie->dim(), name);
}

Connection ModelFile::connection_data() const {
  if (!connection) throw OutOfRange("the model has no [connection] section");
  return Connection{split ? k() : *lie, *connection, split};
}

ModelFile parse_model_text(const std::string& text, const std::string& source) {
  Reader r(source);
  ModelFile f;
  f.source = source;
  std::set<std::string> done;
  for (const Section& s : r.split(text)) {
    if (!done.insert(s.name).second) r.syntax(r.at(s.number, 1), "duplicate section [" + s.name + "]");
    if (s.name == "lie") {
      parse_lie(r, s, f);
    } else if (s.name == "algebra") {
      parse_algebra(r, s, f);
    } else if (s.name == "connection") {
      parse_connection(r, s, f);
    } else if (s.name == "model") {
      parse_model_section(r, s, f);
    } else if (s.name == "task") {
      parse_task(r, s, f);
    } else {
      r.syntax(r.at(s.number, 1), "unknown section [" + s.name + "], expected [lie], [algebra], [connection], [model] or [task]");
    }
  }
  return f;
}

ModelFile parse_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SyntaxError(path + ": cannot read file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_model_text(text.str(), path);
}

std::string print_model(const ModelFile& f, bool expand) {
  std::ostringstream out;
  bool first = true;
  auto section = [&]() {
    if (!first) out << "\n";
    first = false;
  };
  if (f.lie) {
    section();
    print_lie(out, f, expand);
  }
  if (f.explicit_algebra) {
    section();
    print_algebra(out, f);
  }
  if (f.connection) {
    section();
    out << "[connection]\n";
    LieAlgebra k = f.split ? f.k() : *f.lie;
    for (std::size_t a = 0; a < k.dim(); ++a) out << k.basis()[a] << " = " << (*f.connection)[a].to_string() << "\n";
  }
  if (f.model) {
    section();
    out << "[model]\n";
    if (f.model_builtin && !expand) {
      out << "builtin = " << *f.model_builtin << "\n";
    } else {
      print_geometric(out, *f.model);
    }
  }
  if (!f.task.empty()) {
    section();
    out << "[task]\n";
    for (const auto& [k, v] : f.task) out << k << " = " << v << "\n";
  }
  return out.str();
}

bool same_geometric_model(const GeometricModel& a, const GeometricModel& b) {
  return a.name == b.name && a.top_degree == b.top_degree && a.exact == b.exact && a.cochain_rank == b.cochain_rank &&
         a.delta == b.delta && a.cochain_labels == b.cochain_labels && a.form_dim == b.form_dim &&
         a.d_forms == b.d_forms && a.form_labels == b.form_labels && a.j == b.j && a.cup == b.cup &&
         a.wedge == b.wedge && a.j_multiplicative == b.j_multiplicative;
}

bool same_model(const ModelFile& a, const ModelFile& b) {
  if (a.lie.has_value() != b.lie.has_value() || (a.lie && !(*a.lie == *b.lie)) || a.split != b.split) return false;
  if (a.weil != b.weil || a.generators != b.generators) return false;
  if (a.gstar.has_value() != b.gstar.has_value() || (a.gstar && !same_gstar(*a.gstar, *b.gstar))) return false;
  if (a.connection.has_value() != b.connection.has_value() || (a.connection && *a.connection != *b.connection)) {
    return false;
  }
  if (a.model.has_value() != b.model.has_value() || (a.model && !same_geometric_model(*a.model, *b.model))) return false;
  return a.task == b.task;
}

}  // namespace eqdc::cli
