#include "okbody/okcli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <numeric>
#include <sstream>

#include "okbody/monideal.hpp"

namespace okb::cli {

namespace {

std::string str(const BigRational &q) { return okb::to_string(q); }
std::string str(const BigInt &n) { return okb::to_string(BigRational(n)); }

json rats(std::span<const BigRational> v) {
  json a = json::array();
  for (const auto &x : v)
    a.push_back(str(x));
  return a;
}

json ints(std::span<const BigInt> v) {
  json a = json::array();
  for (const auto &x : v)
    a.push_back(str(x));
  return a;
}

json exps(const std::vector<Exponent> &es) {
  json a = json::array();
  for (const auto &e : es)
    a.push_back(e.to_vector());
  return a;
}

[[noreturn]] void bad(const std::string &where, const std::string &what) {
  throw InputError(where + ": " + what);
}

const json &field(const json &obj, const char *name, const std::string &where) {
  if (!obj.is_object())
    bad(where, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end())
    bad(where, std::string("missing field \"") + name + "\"");
  return *it;
}

BigInt get_bigint(const json &j, const std::string &where) {
  if (j.is_number_integer())
    return BigInt(j.dump());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::invalid_argument &) {
    }
  }
  bad(where, "expected an integer, got " + j.dump());
}

int get_int(const json &j, const std::string &where, long lo, long hi) {
  BigInt v = get_bigint(j, where);
  if (v < lo || v > hi)
    bad(where, "value " + v.get_str() + " outside [" + std::to_string(lo) +
                   ", " + std::to_string(hi) + "]");
  return static_cast<int>(v.get_si());
}

// An integer, a "p/q" string, or {"num": p, "den": q}.
BigRational get_rational(const json &j, const std::string &where) {
  if (j.is_number_integer())
    return BigRational(get_bigint(j, where));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception &) {
      bad(where, "cannot read " + j.dump() + " as a rational");
    }
  }
  if (j.is_object()) {
    BigInt num = get_bigint(field(j, "num", where), where + ".num");
    BigInt den = j.contains("den") ? get_bigint(j["den"], where + ".den")
                                   : BigInt(1);
    if (den == 0)
      bad(where + ".den", "zero denominator");
    return make_rational(num, den);
  }
  bad(where, "expected a rational (integer, \"p/q\" or {num, den}), got " +
                 j.dump());
}

const json &get_array(const json &obj, const char *name,
                      const std::string &where) {
  const json &a = field(obj, name, where);
  if (!a.is_array())
    bad(where + "." + name, "expected an array");
  return a;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

BigRational factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= static_cast<unsigned long>(i);
  return BigRational(f);
}

std::string variable_name(std::size_t i) { return "X" + std::to_string(i + 1); }

json certificate_json(const std::optional<ExactnessCertificate> &c) {
  if (!c)
    return nullptr;
  return {{"kind", c->kind == ExactnessCertificate::Kind::monomial_generators
                       ? "monomial_generators"
                       : "complete_simplex"},
          {"degree", c->degree},
          {"explanation", c->explanation}};
}

RationalPolytope hull_of_points(const GradedSeries &s, const Flag &flag,
                                int K) {
  return RationalPolytope::hull(normalized_points(s, flag, K),
                                s.ambient_dim());
}

// Payloads -------------------------------------------------------------------

json run_body(const JobSpec &job, const GradedSeries &s, json &env,
              std::optional<std::string> &svg) {
  auto r = okounkov_body(s, job.flag.make(s.nvars()), job.truncation);
  env["exact"] = r.exact();
  if (job.svg_path)
    svg = polytope_svg(r.polytope, "Newton-Okounkov body, K = " +
                                       std::to_string(job.truncation));
  return {{"body", to_json(r.polytope)},
          {"exact", r.exact()},
          {"certificate", certificate_json(r.certificate)},
          {"point_count", r.point_count}};
}

json run_slice(const JobSpec &job, const GradedSeries &s, json &env) {
  if (!job.t)
    throw InputError("slice needs --t");
  const BigRational t = *job.t;
  if (t < 0)
    throw InputError("slice parameter must be non-negative");
  const Flag flag = job.flag.make(s.nvars());
  const int K = job.truncation;
  auto body = okounkov_body(s, flag, K);
  env["exact"] = body.exact();
  RationalPolytope direct = slice(body.polytope, t);

  const BigInt a = t.get_num(), b = t.get_den();
  if (!a.fits_sint_p() || !b.fits_sint_p())
    throw InputError("slice parameter too large");
  const int ai = static_cast<int>(a.get_si()), bi = static_cast<int>(b.get_si());
  RationalPolytope rhs = restricted_slice_body(s, flag, ai, bi, K);
  // Sampled on the materialized levels only.
  bool point_free = false;
  for (int k = 1; k <= K && !point_free; ++k)
    point_free = !is_base_point(s, k, flag.point());

  BigRational lo, hi;
  bool first = true;
  for (const auto &v : body.polytope.vertices()) {
    if (first || v[0] < lo)
      lo = v[0];
    if (first || v[0] > hi)
      hi = v[0];
    first = false;
  }
  return {{"t", str(t)},
          {"a", ai},
          {"b", bi},
          {"meets_interior", body.polytope.dim() ==
                                     static_cast<int>(s.ambient_dim()) &&
                                 lo < t && t < hi},
          {"direct", to_json(direct)},
          {"restricted", to_json(rhs)},
          {"restricted_truncation", K},
          {"flag_point_outside_base_locus_up_to_K", point_free},
          {"equal", direct == rhs}};
}

json run_volume(const JobSpec &job, const GradedSeries &s, json &env) {
  const Flag flag = job.flag.make(s.nvars());
  const int K = job.truncation;
  auto h = hilbert_data(s, K);
  auto body = okounkov_body(s, flag, K);
  auto idx = semigroup_index(semigroup(s, flag, K));
  env["exact"] = body.exact();
  json index = {{"rank", idx.rank},
                {"index", idx.index ? json(idx.index->get_str()) : json()},
                {"exponent",
                 idx.exponent ? json(idx.exponent->get_str()) : json()}};
  BigRational lhs = factorial(s.ambient_dim()) * body.polytope.volume();
  json norm = {{"rule", "d! * vol(body) = vol(S) * [Z^(d+1) : G]"},
               {"lhs", str(lhs)}};
  if (idx.index) {
    BigRational rhs = h.volume * BigRational(*idx.index);
    norm["rhs"] = str(rhs);
    norm["holds"] = lhs == rhs;
  } else {
    norm["rhs"] = nullptr;
    norm["holds"] = false;
  }
  return {{"hilbert",
           {{"dims", h.dims},
            {"volume", str(h.volume)},
            {"stabilized", h.stabilized}}},
          {"body", to_json(body.polytope)},
          {"body_volume", str(body.polytope.volume())},
          {"index", index},
          {"normalization", norm}};
}

json run_sheafify(const JobSpec &job, const GradedSeries &s) {
  const int K = job.truncation;
  GradedSeries t = sheafify(s, K);
  json levels = json::array();
  for (int k = 1; k <= K; ++k)
    levels.push_back(
        {{"k", k},
         {"dim", s.level(k).dimension()},
         {"sheafified_dim", t.level(k).dimension()},
         {"saturated_base_ideal", exps(saturate(base_ideal(s, k)).generators())}});
  std::vector<Exponent> added;
  auto before = s.level(1).pivots();
  for (const auto &e : t.level(1).pivots())
    if (!std::binary_search(before.begin(), before.end(), e))
      added.push_back(e);
  auto hs = hilbert_data(s, K), ht = hilbert_data(t, K);
  return {{"levels", levels},
          {"added_in_level_1", exps(added)},
          {"volume", str(hs.volume)},
          {"sheafified_volume", str(ht.volume)},
          {"stabilized", hs.stabilized && ht.stabilized}};
}

json run_base_locus(const JobSpec &job, const GradedSeries &s) {
  auto r = base_locus(s, job.truncation);
  json comps = json::array();
  for (const auto &c : r.components) {
    std::string eq;
    for (std::size_t i = 0; i < c.vanishing.size(); ++i)
      eq += (i ? " = " : "") + variable_name(c.vanishing[i]);
    comps.push_back({{"vanishing", c.vanishing},
                     {"equations", c.vanishing.empty() ? "whole space"
                                                       : eq + " = 0"}});
  }
  json ideals = json::array();
  for (std::size_t k = 0; k < r.base_ideals.size(); ++k)
    ideals.push_back(
        {{"k", k + 1}, {"generators", exps(r.base_ideals[k].generators())}});
  return {{"components", comps},
          {"empty", r.empty},
          {"stabilized", r.stabilized},
          {"base_ideals", ideals}};
}

json run_birational(const JobSpec &job, const GradedSeries &s) {
  auto v = is_birational_monomial(s, job.truncation);
  json hnf = json::array();
  for (std::size_t i = 0; i < v.hnf.rows(); ++i)
    hnf.push_back(ints(v.hnf.row(i)));
  return {{"birational", v.birational},
          {"lattice_rank", v.lattice.rank},
          {"index", v.lattice.index ? json(v.lattice.index->get_str()) : json()},
          {"hnf", hnf}};
}

json run_surface(const JobSpec &job, const std::string &text,
                 std::optional<std::string> &svg) {
  auto in = parse_surface(parse_json(text));
  auto body = surface_body(in.lattice, in.d, in.c, in.point_multiplicities);
  auto z = zariski(in.lattice, in.d);
  auto pieces = [](const std::vector<LinearPiece> &ps) {
    json a = json::array();
    for (const auto &p : ps)
      a.push_back({{"slope", str(p.slope)}, {"intercept", str(p.intercept)}});
    return a;
  };
  json strata = json::array();
  for (const auto &s : classify_boundary(body))
    strata.push_back({{"name", s.name},
                      {"tag", s.tag},
                      {"label", to_string(s.label)},
                      {"from", str(s.t_from)},
                      {"to", str(s.t_to)}});
  if (job.svg_path)
    svg = surface_svg(body);
  return {{"zariski", {{"positive", rats(z.positive)}, {"negative", rats(z.negative)}}},
          {"nu", str(body.nu)},
          {"mu", str(body.mu)},
          {"breakpoints", rats(body.breakpoints)},
          {"alpha", pieces(body.alpha)},
          {"beta", pieces(body.beta)},
          {"supports", body.supports},
          {"area", str(body.area())},
          {"body", to_json(body.polygon())},
          {"boundary", strata}};
}

json run_generic(const JobSpec &job, const GradedSeries &s, json &env,
                 std::optional<std::string> &svg) {
  if (job.flags < 1)
    throw InputError("--flags must be at least 1");
  std::vector<std::future<BodyReport>> jobs;
  for (int i = 1; i <= job.flags; ++i)
    jobs.push_back(std::async(std::launch::async, [&, i] {
      return okounkov_body(s, random_flag(s.nvars(), std::uint64_t(i)),
                           job.truncation);
    }));
  std::vector<BodyReport> bodies;
  for (auto &f : jobs)
    bodies.push_back(f.get());
  json seeds = json::array(), list = json::array(), unequal = json::array();
  bool all_exact = true;
  for (int i = 0; i < job.flags; ++i) {
    seeds.push_back(i + 1);
    list.push_back(to_json(bodies[i].polytope));
    all_exact = all_exact && bodies[i].exact();
    for (int j = i + 1; j < job.flags; ++j)
      if (!(bodies[i].polytope == bodies[j].polytope))
        unequal.push_back({i + 1, j + 1});
  }
  env["exact"] = all_exact;
  if (job.svg_path)
    svg = polytope_svg(bodies[0].polytope, "body under flag seed 1");
  return {{"seeds", seeds},
          {"bodies", list},
          {"all_equal", unequal.empty()},
          {"unequal_pairs", unequal}};
}

void sigmas(std::size_t max_len, int budget, std::vector<int> &cur,
            std::vector<std::vector<int>> &out) {
  out.push_back(cur);
  if (cur.size() == max_len)
    return;
  for (int v = 0; v <= budget; ++v) {
    cur.push_back(v);
    sigmas(max_len, budget - v, cur, out);
    cur.pop_back();
  }
}

json run_filtered(const JobSpec &job, const GradedSeries &s) {
  if (job.sigma_max < 0)
    throw InputError("--sigma-max must be non-negative");
  const Flag flag = job.flag.make(s.nvars());
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  sigmas(s.ambient_dim(), job.sigma_max, cur, all);
  json rows = json::array();
  for (const auto &sigma : all) {
    std::vector<std::size_t> dims;
    for (int k = 1; k <= job.truncation; ++k)
      dims.push_back(filtered_dimension(s, flag, k, sigma));
    rows.push_back({{"sigma", sigma}, {"dims", dims}});
  }
  return {{"rows", rows}};
}

json run_fujita(const JobSpec &job, const GradedSeries &s) {
  if (job.p.empty())
    throw InputError("--p needs at least one value");
  std::vector<int> ps = job.p;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  if (ps.front() < 1)
    throw InputError("--p values must be positive");
  const Flag flag = job.flag.make(s.nvars());
  const int K = job.truncation;
  // Every point of (1/p) Delta_K(V_p) is a value of S in degree <= pK.
  const int KS = K * ps.back();
  RationalPolytope whole = hull_of_points(s, flag, KS);
  std::vector<RationalPolytope> bodies;
  json list = json::array();
  for (int p : ps) {
    bodies.push_back(
        scale(hull_of_points(fujita_subseries(s, p), flag, K), make_rational(1, p)));
    list.push_back({{"p", p},
                    {"body", to_json(bodies.back())},
                    {"inside_series_body", is_subset(bodies.back(), whole)}});
  }
  json chain = json::array();
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (ps[j] % ps[i] == 0)
        chain.push_back({{"p", ps[i]},
                         {"p_prime", ps[j]},
                         {"contained", is_subset(bodies[i], bodies[j])}});
  return {{"bodies", list},
          {"series_body", to_json(whole)},
          {"series_truncation", KS},
          {"chain", chain}};
}

// SVG ------------------------------------------------------------------------

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 5e-3 ? 0.0 : x);
  return buf;
}

std::string escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else if (c == '&')
      out += "&amp;";
    else
      out += c;
  }
  return out;
}

struct Canvas {
  double minx, maxx, miny, maxy;
  static constexpr double size = 480, margin = 70;
  double sx() const { return (size - 2 * margin) / std::max(maxx - minx, 1e-9); }
  double sy() const { return (size - 2 * margin) / std::max(maxy - miny, 1e-9); }
  double s() const { return std::min(sx(), sy()); }
  double X(double x) const { return margin + (x - minx) * s(); }
  double Y(double y) const { return size - margin - (y - miny) * s(); }

  static Canvas fit(const std::vector<std::pair<double, double>> &pts) {
    Canvas c{0, 0, 0, 0};
    for (auto [x, y] : pts) {
      c.minx = std::min(c.minx, x);
      c.maxx = std::max(c.maxx, x);
      c.miny = std::min(c.miny, y);
      c.maxy = std::max(c.maxy, y);
    }
    return c;
  }
};

std::string svg_header(const std::string &title) {
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
    << Canvas::size << "\" height=\"" << Canvas::size << "\" viewBox=\"0 0 "
    << Canvas::size << " " << Canvas::size << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << Canvas::size / 2
    << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"14\">"
    << escape(title) << "</text>\n";
  return o.str();
}

std::string line(double x1, double y1, double x2, double y2,
                 const std::string &style) {
  return "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" +
         fmt(x2) + "\" y2=\"" + fmt(y2) + "\" " + style + "/>\n";
}

std::string label(double x, double y, const std::string &text,
                  const std::string &extra = "") {
  return "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) +
         "\" font-family=\"sans-serif\" font-size=\"11\" " + extra + ">" +
         escape(text) + "</text>\n";
}

std::string axes(const Canvas &c, const std::string &xname,
                 const std::string &yname) {
  const std::string style = "stroke=\"#444\" stroke-width=\"1\"";
  std::string o;
  o += line(c.X(c.minx), c.Y(0), c.X(c.maxx) + 20, c.Y(0), style);
  o += line(c.X(0), c.Y(c.miny), c.X(0), c.Y(c.maxy) - 20, style);
  o += label(c.X(c.maxx) + 22, c.Y(0) + 4, xname);
  o += label(c.X(0) - 4, c.Y(c.maxy) - 26, yname);
  return o;
}

} // namespace

// Parsing ---------------------------------------------------------------------

GradedSeries parse_series(const json &doc) {
  const std::string root = "series";
  const int d = get_int(field(doc, "ambient_dim", root), "ambient_dim", 0,
                        long(Exponent::kMaxVars) - 1);
  const int m = get_int(field(doc, "divisor_degree", root), "divisor_degree",
                        1, 1 << 16);
  const std::size_t n = std::size_t(d) + 1;
  const json &gens = get_array(doc, "generators", root);
  std::vector<GeneratorBlock> blocks;
  for (std::size_t b = 0; b < gens.size(); ++b) {
    const std::string wb = "generators[" + std::to_string(b) + "]";
    GeneratorBlock block;
    block.degree = get_int(field(gens[b], "degree", wb), wb + ".degree", 1,
                           1 << 12);
    const int total = block.degree * m;
    const json &forms = get_array(gens[b], "forms", wb);
    for (std::size_t f = 0; f < forms.size(); ++f) {
      const std::string wf = wb + ".forms[" + std::to_string(f) + "]";
      if (!forms[f].is_array())
        bad(wf, "expected an array of terms");
      HomogeneousForm form(n, total);
      for (std::size_t t = 0; t < forms[f].size(); ++t) {
        const std::string wt = wf + "[" + std::to_string(t) + "]";
        const json &term = forms[f][t];
        const json &e = field(term, "exp", wt);
        if (!e.is_array() || e.size() != n)
          bad(wt + ".exp", "expected " + std::to_string(n) + " exponents");
        std::vector<int> ev;
        for (std::size_t i = 0; i < n; ++i)
          ev.push_back(get_int(e[i], wt + ".exp[" + std::to_string(i) + "]",
                               0, 1 << 20));
        int sum = std::accumulate(ev.begin(), ev.end(), 0);
        if (sum != total)
          bad(wt + ".exp", "exponents sum to " + std::to_string(sum) +
                               ", but degree " + std::to_string(block.degree) +
                               " times m = " + std::to_string(m) + " is " +
                               std::to_string(total));
        BigInt num = get_bigint(field(term, "num", wt), wt + ".num");
        BigInt den = term.contains("den") ? get_bigint(term["den"], wt + ".den")
                                          : BigInt(1);
        if (den == 0)
          bad(wt + ".den", "zero denominator");
        form.add_term(Exponent(std::span<const int>(ev)), make_rational(num, den));
      }
      block.forms.push_back(std::move(form));
    }
    blocks.push_back(std::move(block));
  }
  return GradedSeries::generated(std::size_t(d), m, std::move(blocks));
}

GradedSeries parse_series_text(std::string_view text) {
  return parse_series(parse_json(text));
}

GradedSeries parse_series_file(const std::string &path) {
  return parse_series_text(read_file(path));
}

json serialize_series(const GradedSeries &s) {
  const auto *gens = s.generators();
  if (!gens)
    throw UnsupportedError("only generated series can be serialized");
  json blocks = json::array();
  for (const auto &b : *gens) {
    json forms = json::array();
    for (const auto &f : b.forms) {
      json terms = json::array();
      for (const auto &[e, c] : f.terms()) {
        json t = {{"exp", e.to_vector()}};
        const BigInt &num = c.get_num(), &den = c.get_den();
        t["num"] = num.fits_slong_p() ? json(num.get_si()) : json(num.get_str());
        t["den"] = den.fits_slong_p() ? json(den.get_si()) : json(den.get_str());
        terms.push_back(std::move(t));
      }
      forms.push_back(std::move(terms));
    }
    blocks.push_back({{"degree", b.degree}, {"forms", forms}});
  }
  return {{"ambient_dim", s.ambient_dim()},
          {"divisor_degree", s.divisor_degree()},
          {"generators", blocks}};
}

SurfaceInput parse_surface(const json &doc) {
  const std::string root = "surface";
  SurfaceInput in;
  auto &l = in.lattice;
  l.rank = std::size_t(get_int(field(doc, "rank", root), "rank", 1, 64));
  auto int_rows = [&](const char *name, bool square) {
    std::vector<IntVector> rows;
    const json &a = get_array(doc, name, root);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string w = std::string(name) + "[" + std::to_string(i) + "]";
      if (!a[i].is_array() || a[i].size() != l.rank)
        bad(w, "expected " + std::to_string(l.rank) + " integers");
      IntVector row;
      for (std::size_t j = 0; j < l.rank; ++j)
        row.push_back(get_bigint(a[i][j], w + "[" + std::to_string(j) + "]"));
      rows.push_back(std::move(row));
    }
    if (square && rows.size() != l.rank)
      bad(name, "expected " + std::to_string(l.rank) + " rows");
    return rows;
  };
  l.gram = matrix_from_rows(int_rows("gram", true), l.rank);
  l.negative_curves = int_rows("negative_curves", false);
  l.effective_generators = int_rows("effective_generators", false);
  auto vec = [&](const char *name) {
    const json &a = get_array(doc, name, root);
    if (a.size() != l.rank)
      bad(name, "expected " + std::to_string(l.rank) + " entries");
    RatVector v;
    for (std::size_t i = 0; i < a.size(); ++i)
      v.push_back(get_rational(a[i], std::string(name) + "[" +
                                         std::to_string(i) + "]"));
    return v;
  };
  in.d = vec("D");
  in.c = vec("C");
  if (doc.contains("point_multiplicities")) {
    const json &pm = doc["point_multiplicities"];
    if (!pm.is_object())
      bad("point_multiplicities", "expected an object keyed by curve index");
    for (const auto &[key, value] : pm.items()) {
      const std::string w = "point_multiplicities." + key;
      int idx = get_int(json(key), w, 0, long(l.negative_curves.size()) - 1);
      in.point_multiplicities[std::size_t(idx)] = get_int(value, w, 0, 1 << 20);
    }
  }
  l.validate();
  return in;
}

SurfaceInput parse_surface_file(const std::string &path) {
  return parse_surface(parse_json(read_file(path)));
}

// Jobs ------------------------------------------------------------------------

Flag FlagSpec::make(std::size_t nvars) const {
  switch (kind) {
  case Kind::identity:
    return Flag::standard(nvars);
  case Kind::seed:
    return random_flag(nvars, seed);
  case Kind::matrix:
    if (matrix.rows() != nvars || matrix.cols() != nvars)
      throw InputError("flag matrix must be " + std::to_string(nvars) + "x" +
                       std::to_string(nvars));
    return Flag(matrix, "matrix");
  }
  return Flag::standard(nvars);
}

json FlagSpec::to_json() const {
  switch (kind) {
  case Kind::identity:
    return {{"kind", "identity"}};
  case Kind::seed:
    return {{"kind", "seed"}, {"seed", seed}};
  case Kind::matrix: {
    json rows = json::array();
    for (std::size_t i = 0; i < matrix.rows(); ++i)
      rows.push_back(rats(matrix.row(i)));
    return {{"kind", "matrix"}, {"matrix", rows}};
  }
  }
  return nullptr;
}

RatMatrix parse_matrix(const std::string &text) {
  std::vector<RatVector> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    RatVector r;
    std::stringstream es(row);
    std::string entry;
    while (std::getline(es, entry, ',')) {
      entry.erase(std::remove_if(entry.begin(), entry.end(), ::isspace),
                  entry.end());
      try {
        r.push_back(parse_rational(entry));
      } catch (const std::exception &) {
        throw InputError("flag matrix entry \"" + entry + "\" is not rational");
      }
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty())
    throw InputError("empty flag matrix");
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw InputError("flag matrix rows have different lengths");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

const std::vector<std::string> &commands() {
  static const std::vector<std::string> c{
      "body",     "slice",     "volume",       "sheafify",      "base-locus",
      "birational", "surface", "generic-test", "filtered-dims", "fujita"};
  return c;
}

ResultEnvelope run(const JobSpec &job) {
  if (std::find(commands().begin(), commands().end(), job.command) ==
      commands().end())
    throw InputError("unknown command \"" + job.command + "\"");
  if (job.truncation < 1)
    throw InputError("truncation bound must be at least 1");
  const std::string text = read_file(job.input);
  json env = {{"schema", kSchemaVersion},
              {"tool", "okbody"},
              {"version", kToolVersion},
              {"command", job.command},
              {"input", {{"path", job.input}, {"sha256", sha256_hex(text)}}},
              {"truncation", job.truncation},
              {"flag", job.flag.to_json()},
              {"exact", nullptr}};
  std::optional<std::string> svg;
  json payload;
  if (job.command == "surface") {
    payload = run_surface(job, text, svg);
  } else {
    GradedSeries s = parse_series_text(text);
    if (job.command == "body")
      payload = run_body(job, s, env, svg);
    else if (job.command == "slice")
      payload = run_slice(job, s, env);
    else if (job.command == "volume")
      payload = run_volume(job, s, env);
    else if (job.command == "sheafify")
      payload = run_sheafify(job, s);
    else if (job.command == "base-locus")
      payload = run_base_locus(job, s);
    else if (job.command == "birational")
      payload = run_birational(job, s);
    else if (job.command == "generic-test")
      payload = run_generic(job, s, env, svg);
    else if (job.command == "filtered-dims")
      payload = run_filtered(job, s);
    else
      payload = run_fujita(job, s);
  }
  if (job.svg_path) {
    if (!svg)
      throw UnsupportedError("svg output is available for body, generic-test "
                             "and surface");
    write_file(*job.svg_path, *svg);
    env["svg"] = *job.svg_path;
  }
  env["payload"] = std::move(payload);
  return {std::move(env)};
}

int exit_code(const std::exception &e) {
  if (dynamic_cast<const InputError *>(&e) ||
      dynamic_cast<const json::exception *>(&e))
    return 2;
  if (dynamic_cast<const UnsupportedError *>(&e))
    return 3;
  return 4;
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) !=
      1)
    throw InvariantError("SHA-256 digest failed");
  static const char *hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open " + path);
  std::ostringstream o;
  o << in.rdbuf();
  return o.str();
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError("cannot write " + path);
  out << content;
}

json to_json(const RationalPolytope &p) {
  json verts = json::array(), facets = json::array(), eqs = json::array();
  for (const auto &v : p.vertices())
    verts.push_back(rats(v));
  for (const auto &f : p.facets())
    facets.push_back({{"normal", ints(f.normal)}, {"offset", str(f.offset)}});
  for (const auto &e : p.equations())
    eqs.push_back({{"normal", ints(e.normal)}, {"offset", str(e.offset)}});
  return {{"ambient_dim", p.ambient_dim()},
          {"dim", p.dim()},
          {"vertices", verts},
          {"facets", facets},
          {"equations", eqs},
          {"volume", str(p.volume())}};
}

// Plots -----------------------------------------------------------------------

std::string polytope_svg(const RationalPolytope &p, const std::string &title) {
  const std::size_t n = p.ambient_dim();
  if (n != 2 && n != 3)
    throw UnsupportedError("svg output needs a body in R^2 or R^3, not R^" +
                           std::to_string(n));
  if (p.is_empty())
    throw UnsupportedError("cannot draw an empty body");
  const auto &vs = p.vertices();
  auto project = [&](const RatVector &v) {
    double x = v[0].get_d(), y = v[1].get_d();
    if (n == 3) {
      double z = v[2].get_d();
      x += 0.5 * z;
      y += 0.35 * z;
    }
    return std::pair{x, y};
  };
  std::vector<std::pair<double, double>> pts;
  for (const auto &v : vs)
    pts.push_back(project(v));
  Canvas c = Canvas::fit(pts);

  // (u, v) is an edge when the constraints tight at both cut out a line.
  auto tight = [&](const RatVector &v) {
    std::vector<std::size_t> t;
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
      const auto &h = p.facets()[f];
      if (dot(RatVector(h.normal.begin(), h.normal.end()), v) == h.offset)
        t.push_back(f);
    }
    return t;
  };
  std::vector<std::vector<std::size_t>> tights;
  for (const auto &v : vs)
    tights.push_back(tight(v));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(tights[i].begin(), tights[i].end(),
                            tights[j].begin(), tights[j].end(),
                            std::back_inserter(common));
      RatMatrix m(common.size() + p.equations().size(), n);
      std::size_t r = 0;
      for (auto f : common) {
        for (std::size_t k = 0; k < n; ++k)
          m(r, k) = p.facets()[f].normal[k];
        ++r;
      }
      for (const auto &e : p.equations()) {
        for (std::size_t k = 0; k < n; ++k)
          m(r, k) = e.normal[k];
        ++r;
      }
      if (rank(m) >= n - 1)
        edges.push_back({i, j});
    }

  std::string o = svg_header(title);
  o += axes(c, "e1", "e2");
  if (n == 3) {
    auto [zx, zy] = project(RatVector{0, 0, 1});
    double len = std::max(c.maxx - c.minx, c.maxy - c.miny) / 2;
    o += line(c.X(0), c.Y(0), c.X(zx * len), c.Y(zy * len),
              "stroke=\"#444\" stroke-width=\"1\" stroke-dasharray=\"3,3\"");
    o += label(c.X(zx * len) + 4, c.Y(zy * len), "e3");
  }
  if (n == 2 && p.dim() == 2) {
    double cx = 0, cy = 0;
    for (auto [x, y] : pts) {
      cx += x;
      cy += y;
    }
    cx /= double(pts.size());
    cy /= double(pts.size());
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::atan2(pts[a].second - cy, pts[a].first - cx) <
             std::atan2(pts[b].second - cy, pts[b].first - cx);
    });
    o += "<polygon points=\"";
    for (std::size_t k = 0; k < order.size(); ++k)
      o += (k ? " " : "") + fmt(c.X(pts[order[k]].first)) + "," +
           fmt(c.Y(pts[order[k]].second));
    o += "\" fill=\"#cfe2f3\" stroke=\"none\"/>\n";
  }
  for (auto [i, j] : edges)
    o += line(c.X(pts[i].first), c.Y(pts[i].second), c.X(pts[j].first),
              c.Y(pts[j].second), "stroke=\"#1f4e79\" stroke-width=\"2\"");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    o += "<circle cx=\"" + fmt(c.X(pts[i].first)) + "\" cy=\"" +
         fmt(c.Y(pts[i].second)) + "\" r=\"3\" fill=\"#1f4e79\"/>\n";
    o += label(c.X(pts[i].first) + 5, c.Y(pts[i].second) - 5,
               okb::to_string(vs[i]));
  }
  return o + "</svg>\n";
}

std::string surface_svg(const SurfaceBody &body) {
  std::vector<std::pair<double, double>> pts;
  std::vector<std::pair<double, double>> lower, upper;
  for (std::size_t i = 0; i < body.breakpoints.size(); ++i) {
    std::size_t piece = std::min(i, body.alpha.size() - 1);
    const auto &t = body.breakpoints[i];
    lower.push_back({t.get_d(), body.alpha[piece].at(t).get_d()});
    upper.push_back({t.get_d(), body.beta[piece].at(t).get_d()});
  }
  pts.insert(pts.end(), lower.begin(), lower.end());
  pts.insert(pts.end(), upper.begin(), upper.end());
  Canvas c = Canvas::fit(pts);

  std::string o = svg_header("Newton-Okounkov body of a surface divisor");
  o += axes(c, "t", "y");
  o += "<polygon points=\"";
  for (std::size_t i = 0; i < lower.size(); ++i)
    o += (i ? " " : "") + fmt(c.X(lower[i].first)) + "," + fmt(c.Y(lower[i].second));
  for (std::size_t i = upper.size(); i-- > 0;)
    o += " " + fmt(c.X(upper[i].first)) + "," + fmt(c.Y(upper[i].second));
  o += "\" fill=\"#e8f0e0\" stroke=\"none\"/>\n";

  const std::string lower_style = "stroke=\"#2e7d32\" stroke-width=\"2.5\"";
  const std::string left_style = "stroke=\"#1565c0\" stroke-width=\"2.5\"";
  const std::string upper_style =
      "stroke=\"#616161\" stroke-width=\"2\" stroke-dasharray=\"6,4\"";
  const std::string right_style = "stroke=\"#c62828\" stroke-width=\"2.5\"";
  for (std::size_t i = 0; i + 1 < lower.size(); ++i) {
    o += line(c.X(lower[i].first), c.Y(lower[i].second),
              c.X(lower[i + 1].first), c.Y(lower[i + 1].second), lower_style);
    o += line(c.X(upper[i].first), c.Y(upper[i].second),
              c.X(upper[i + 1].first), c.Y(upper[i + 1].second), upper_style);
  }
  o += line(c.X(lower.front().first), c.Y(lower.front().second),
            c.X(upper.front().first), c.Y(upper.front().second), left_style);
  if (body.mu != body.nu) {
    o += line(c.X(lower.back().first), c.Y(lower.back().second),
              c.X(upper.back().first), c.Y(upper.back().second), right_style);
    o += label(c.X(upper.back().first) + 6,
               (c.Y(upper.back().second) + c.Y(lower.back().second)) / 2, "?",
               "fill=\"#c62828\" font-size=\"14\"");
  }
  for (std::size_t i = 0; i < body.breakpoints.size(); ++i) {
    double x = c.X(body.breakpoints[i].get_d());
    o += line(x, c.Y(0) - 4, x, c.Y(0) + 4, "stroke=\"#444\"");
    std::string name = okb::to_string(body.breakpoints[i]);
    if (i == 0)
      name = "nu=" + name;
    else if (i + 1 == body.breakpoints.size())
      name = "mu=" + name;
    o += label(x, c.Y(0) + 18, name, "text-anchor=\"middle\"");
  }
  const std::pair<std::string, std::string> legend[] = {
      {"fill=\"#e8f0e0\"", "(a) interior rational points: valuative"},
      {"fill=\"#1565c0\"", "(b) left edge: valuative"},
      {"fill=\"#2e7d32\"", "(c) lower graph alpha: valuative"},
      {"fill=\"#616161\"", "upper graph beta: unknown"},
      {"fill=\"#c62828\"", "? right edge: unknown"},
  };
  double y = Canvas::size - 60;
  for (const auto &[fill, text] : legend) {
    o += "<rect x=\"300\" y=\"" + fmt(y - 9) + "\" width=\"10\" height=\"10\" " +
         fill + "/>\n";
    o += label(314, y, text, "font-size=\"9\"");
    y += 12;
  }
  return o + "</svg>\n";
}

} // namespace okb::cli
