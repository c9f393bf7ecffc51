#include "rfd/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rfd/errors.hpp"

namespace rfd {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void error_at(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::size_t parse_count(std::string_view text, std::size_t line, const std::string& key) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) error_at(line, key + " must be a non-negative integer");
  return v;
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\'' || c == '.';
  });
}

struct Entry {
  std::string key;
  std::string value;
  std::size_t line;
};

struct Section {
  std::string kind;
  std::string name;
  std::size_t line;
  std::vector<Entry> entries;

  const Entry* find(std::string_view key) const {
    const Entry* hit = nullptr;
    for (const auto& e : entries)
      if (e.key == key) {
        if (hit) error_at(e.line, "duplicate key '" + e.key + "'");
        hit = &e;
      }
    return hit;
  }

  void allow(std::initializer_list<std::string_view> keys) const {
    for (const auto& e : entries)
      if (std::find(keys.begin(), keys.end(), e.key) == keys.end())
        error_at(e.line, "unknown key '" + e.key + "' in [" + kind + "]");
  }
};

std::vector<Section> split_sections(std::string_view text) {
  std::vector<Section> sections;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') error_at(line_no, "unterminated section header");
      std::string_view inner = trim(line.substr(1, line.size() - 2));
      const auto space = inner.find_first_of(" \t");
      Section s;
      s.kind = std::string(inner.substr(0, space));
      s.name = space == std::string_view::npos ? "" : std::string(trim(inner.substr(space)));
      s.line = line_no;
      static const std::set<std::string> kinds{"ring", "module", "prime", "ideals", "options"};
      if (!kinds.count(s.kind)) error_at(line_no, "unknown section [" + s.kind + "]");
      const bool named = s.kind == "module" || s.kind == "prime";
      if (named && !valid_name(s.name)) error_at(line_no, "[" + s.kind + "] needs a name");
      if (!named && !s.name.empty()) error_at(line_no, "[" + s.kind + "] takes no name");
      sections.push_back(std::move(s));
      continue;
    }
    if (sections.empty()) error_at(line_no, "content before the first section");
    Section& s = sections.back();
    const char sep = s.kind == "ideals" ? ':' : '=';
    const auto at = line.find(sep);
    if (at == std::string_view::npos) error_at(line_no, std::string("expected '") + sep + "'");
    Entry e{std::string(trim(line.substr(0, at))), std::string(trim(line.substr(at + 1))), line_no};
    if (e.key.empty()) error_at(line_no, "empty key");
    s.entries.push_back(std::move(e));
  }
  return sections;
}

template <class F>
auto at_line(std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    const std::string what = e.what();
    if (what.rfind("line ", 0) == 0) throw;
    error_at(line, what);
  }
}

// "[a, b], [c, d]" -> columns of polynomials.
std::vector<std::vector<std::string>> parse_rows(std::string_view text, std::size_t line) {
  std::vector<std::vector<std::string>> rows;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '[') error_at(line, "expected '[' in rows");
    const auto close = text.find(']', i);
    if (close == std::string_view::npos) error_at(line, "unterminated '[' in rows");
    std::vector<std::string> row;
    std::string_view inner = text.substr(i + 1, close - i - 1);
    std::size_t start = 0;
    while (true) {
      const auto comma = inner.find(',', start);
      row.emplace_back(trim(inner.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
      if (row.back().empty()) error_at(line, "empty entry in rows");
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
    i = close + 1;
    skip_space();
    if (i < text.size()) {
      if (text[i] != ',') error_at(line, "expected ',' between rows");
      ++i;
      skip_space();
    }
  }
  return rows;
}

ModulePresentation parse_module(const RingPtr& ring, const Entry& e) {
  const std::string& v = e.value;
  const auto colon = v.find(':');
  if (colon == std::string::npos) error_at(e.line, "presentation must start with 'cyclic:' or 'cokernel:'");
  const std::string kind(trim(std::string_view(v).substr(0, colon)));
  const std::string_view body = trim(std::string_view(v).substr(colon + 1));
  if (kind == "cyclic") {
    return at_line(e.line, [&] { return ModulePresentation::cyclic(ring, parse_polynomial_list(body, ring->ambient())); });
  }
  if (kind != "cokernel") error_at(e.line, "unknown presentation kind '" + kind + "'");

  std::optional<std::size_t> rank;
  std::vector<std::vector<std::string>> rows;
  std::string_view rest = body;
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    const std::string_view part = trim(rest.substr(0, semi));
    rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) error_at(e.line, "expected key=value in cokernel presentation");
    const std::string key(trim(part.substr(0, eq)));
    const std::string_view value = trim(part.substr(eq + 1));
    if (key == "rank") rank = parse_count(value, e.line, "rank");
    else if (key == "rows") rows = parse_rows(value, e.line);
    else error_at(e.line, "unknown cokernel key '" + key + "'");
  }
  if (!rank) error_at(e.line, "cokernel presentation needs rank=<f>");
  std::vector<FreeElement> rels;
  for (const auto& row : rows) {
    if (row.size() != *rank)
      error_at(e.line, "row has " + std::to_string(row.size()) + " entries, rank is " + std::to_string(*rank));
    std::vector<Polynomial> entries;
    for (const auto& s : row) entries.push_back(at_line(e.line, [&] { return ring->parse(s); }));
    rels.emplace_back(std::move(entries));
  }
  return ModulePresentation(ring, *rank, std::move(rels));
}

RingPtr parse_ring(const Section& s) {
  s.allow({"field", "vars", "order", "relations"});
  const Entry* field_e = s.find("field");
  const Entry* vars_e = s.find("vars");
  if (!vars_e) error_at(s.line, "[ring] needs vars");

  Field field = Field::rationals();
  if (field_e) {
    std::istringstream in(field_e->value);
    std::string head;
    in >> head;
    if (head == "Q" || head == "QQ") {
      std::string extra;
      if (in >> extra) error_at(field_e->line, "unexpected text after field Q");
    } else if (head == "F" || head == "GF") {
      std::string p;
      if (!(in >> p)) error_at(field_e->line, "field F needs a prime");
      const std::size_t value = parse_count(p, field_e->line, "field characteristic");
      field = at_line(field_e->line, [&] { return Field::prime(value); });
    } else {
      error_at(field_e->line, "field must be Q or F <prime>");
    }
  }

  std::vector<std::string> vars;
  {
    std::string text = vars_e->value;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream in(text);
    for (std::string v; in >> v;) vars.push_back(v);
  }
  if (vars.empty()) error_at(vars_e->line, "vars is empty");
  if (vars.size() > 31) error_at(vars_e->line, "at most 31 variables are supported");

  MonomialOrder order = MonomialOrder::grevlex;
  if (const Entry* o = s.find("order")) {
    if (o->value == "lex") order = MonomialOrder::lex;
    else if (o->value != "grevlex") error_at(o->line, "order must be grevlex or lex");
  }

  auto ambient = at_line(vars_e->line, [&] { return std::make_shared<const PolyRing>(field, vars, order); });
  std::vector<Polynomial> rels;
  std::size_t rel_line = s.line;
  if (const Entry* r = s.find("relations")) {
    rel_line = r->line;
    rels = at_line(r->line, [&] { return parse_polynomial_list(r->value, ambient); });
  }
  try {
    return std::make_shared<const Ring>(ambient, std::move(rels));
  } catch (const InputError&) {
    error_at(rel_line, "relations generate the unit ideal (zero ring)");
  }
}

}  // namespace

const NamedModule* InstanceSpec::module(std::string_view name) const {
  for (const auto& m : modules)
    if (m.name == name) return &m;
  return nullptr;
}

Analyzer InstanceSpec::analyzer(std::optional<std::size_t> max_ext) const {
  std::vector<Ideal> extras;
  for (const auto& i : ideals) extras.push_back(i.ideal);
  AnalyzerOptions opts;
  if (max_ext) opts.max_homological_degree = *max_ext;
  else if (options.max_homological_degree) opts.max_homological_degree = *options.max_homological_degree;
  return Analyzer(ring, primes, ideal_battery(ring, primes, extras), opts);
}

Budget InstanceSpec::budget(std::string label) const {
  Budget b;
  b.label = std::move(label);
  if (options.budget_reductions) b.max_reductions = *options.budget_reductions;
  return b;
}

InstanceSpec parse_instance(std::string_view text, std::string name) {
  const auto sections = split_sections(text);
  InstanceSpec spec;
  spec.name = std::move(name);

  const Section* ring_s = nullptr;
  const Section* options_s = nullptr;
  const Section* ideals_s = nullptr;
  for (const auto& s : sections) {
    const Section** slot = s.kind == "ring" ? &ring_s : s.kind == "options" ? &options_s : s.kind == "ideals" ? &ideals_s : nullptr;
    if (!slot) continue;
    if (*slot) error_at(s.line, "duplicate [" + s.kind + "] section");
    *slot = &s;
  }
  if (!ring_s) throw InputError("line 1: missing [ring] section");
  spec.ring = parse_ring(*ring_s);
  const RingPtr& ring = spec.ring;

  if (options_s) {
    options_s->allow({"max_homological_degree", "prime_mode", "budget_reductions"});
    if (const Entry* e = options_s->find("max_homological_degree"))
      spec.options.max_homological_degree = parse_count(e->value, e->line, e->key);
    if (const Entry* e = options_s->find("budget_reductions"))
      spec.options.budget_reductions = parse_count(e->value, e->line, e->key);
    if (const Entry* e = options_s->find("prime_mode")) {
      if (e->value == "monomial") spec.options.prime_mode = PrimeMode::monomial;
      else if (e->value == "listed") spec.options.prime_mode = PrimeMode::listed;
      else error_at(e->line, "prime_mode must be monomial or listed");
    }
  }

  std::set<std::string> module_names{"R"};
  spec.modules.push_back({"R", "cyclic: 0", ModulePresentation::free(ring, 1)});
  std::map<std::string, std::size_t> module_lines;
  std::vector<PrimeCandidate> user_primes;
  std::vector<std::size_t> prime_lines;
  std::set<std::string> prime_names;
  for (const auto& s : sections) {
    if (s.kind == "module") {
      s.allow({"presentation"});
      if (!module_names.insert(s.name).second) error_at(s.line, "duplicate module name '" + s.name + "'");
      const Entry* p = s.find("presentation");
      if (!p) error_at(s.line, "module " + s.name + " needs a presentation");
      spec.modules.push_back({s.name, p->value, parse_module(ring, *p)});
      module_lines[s.name] = s.line;
    } else if (s.kind == "prime") {
      s.allow({"gens", "height"});
      if (!prime_names.insert(s.name).second) error_at(s.line, "duplicate prime name '" + s.name + "'");
      const Entry* g = s.find("gens");
      if (!g) error_at(s.line, "prime " + s.name + " needs gens");
      auto gens = at_line(g->line, [&] { return parse_polynomial_list(g->value, ring->ambient()); });
      if (gens.empty()) error_at(g->line, "prime " + s.name + " has no generators");
      std::optional<long> height;
      if (const Entry* h = s.find("height")) height = static_cast<long>(parse_count(h->value, h->line, "height"));
      const bool monomial_gens =
          std::all_of(gens.begin(), gens.end(), [](const Polynomial& f) { return f.terms().size() == 1; });
      PrimeCandidate p = listed_prime(ring, s.name, std::move(gens), height);
      if (!p.monomial && monomial_gens && ring->is_monomial())
        error_at(g->line, "prime " + s.name + " is not prime: a monomial ideal is prime only when generated by variables");
      if (p.ideal.is_unit()) error_at(s.line, "prime " + s.name + " is the unit ideal");
      if (s.name == "m" && !(p.ideal == ring->maximal_ideal()))
        error_at(s.line, "the name m is reserved for the ideal of all variables");
      user_primes.push_back(std::move(p));
      prime_lines.push_back(s.line);
    }
  }
  if (ideals_s) {
    std::set<std::string> names;
    for (const auto& e : ideals_s->entries) {
      if (!valid_name(e.key)) error_at(e.line, "bad ideal name '" + e.key + "'");
      if (!names.insert(e.key).second) error_at(e.line, "duplicate ideal name '" + e.key + "'");
      auto gens = at_line(e.line, [&] { return parse_polynomial_list(e.value, ring->ambient()); });
      spec.ideals.push_back({e.key, ring->ideal(std::move(gens))});
    }
  }

  // Mode: monomial exactly when every piece of data is monomial.
  std::string blocker;
  if (!ring->is_monomial()) blocker = "the relations are not monomial";
  for (std::size_t k = 0; k < user_primes.size() && blocker.empty(); ++k)
    if (!user_primes[k].monomial)
      blocker = "prime " + user_primes[k].name + " (line " + std::to_string(prime_lines[k]) + ") is not generated by variables";
  for (const auto& m : spec.modules) {
    if (!blocker.empty()) break;
    if (!m.module.is_multigraded())
      blocker = "module " + m.name + " (line " + std::to_string(module_lines[m.name]) + ") is not multigraded";
  }
  PrimeMode mode = spec.options.prime_mode.value_or(blocker.empty() ? PrimeMode::monomial : PrimeMode::listed);
  if (mode == PrimeMode::monomial && !blocker.empty()) {
    std::size_t line = options_s ? options_s->line : ring_s->line;
    if (options_s)
      if (const Entry* e = options_s->find("prime_mode")) line = e->line;
    error_at(line, "prime_mode = monomial but " + blocker);
  }

  spec.primes = candidate_primes(ring, mode, user_primes);
  for (std::size_t k = 0; k < user_primes.size(); ++k) {
    const auto& p = user_primes[k];
    if (!spec.primes.find(p.name)) {
      if (mode == PrimeMode::monomial)
        error_at(prime_lines[k], "prime " + p.name + " is not a prime of R: its variables miss a relation");
      error_at(prime_lines[k], "prime " + p.name + " duplicates an earlier prime");
    }
    if (mode == PrimeMode::listed && !p.monomial)
      spec.warnings.push_back("prime " + p.name + " is trusted to be prime, not verified");
  }
  if (mode == PrimeMode::listed && !spec.primes.maximal)
    spec.warnings.push_back("the variables do not define a maximal ideal of R; no prime m");
  return spec;
}

InstanceSpec load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), path.stem().string());
}

}  // namespace rfd
