#include "gaborcert/transcendence.hpp"
#include "gaborcert/errors.hpp"
#include "gaborcert/rng.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>

namespace gaborcert {

const char* to_string(KernelMode m) {
  switch (m) {
    case KernelMode::Auto: return "auto";
    case KernelMode::Exact: return "exact";
    case KernelMode::Numeric: return "numeric";
  }
  return "?";
}

const char* to_string(TransKind k) {
  switch (k) {
    case TransKind::NotTranscendental: return "NotTranscendental";
    case TransKind::TranscendentalUpToHeight: return "TranscendentalUpToHeight";
    case TransKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

// Expand surd-valued tables into Gaussian-rational coordinate tables.  The
// numbers sqrt(f), f squarefree, are linearly independent over Q, so
// sum_i a_i v_i = 0 holds iff a annihilates the coefficient vector of every
// sqrt(f) (and the rational part, key 1) separately.  Tables with no terms
// at all (identically zero) contribute no constraint.
std::vector<std::vector<CxRat>> surd_coordinate_tables(
    const std::vector<MinorTable>& tabs) {
  std::vector<std::vector<CxRat>> out;
  for (const auto& t : tabs) {
    std::set<std::uint64_t> keys;
    for (const auto& v : t.exact) {
      for (const auto& [f, c] : v.re.terms()) keys.insert(f);
      for (const auto& [f, c] : v.im.terms()) keys.insert(f);
    }
    for (std::uint64_t f : keys) {
      std::vector<CxRat> row;
      row.reserve(t.exact.size());
      for (const auto& v : t.exact)
        row.push_back({v.re.coeff(f), v.im.coeff(f)});
      out.push_back(std::move(row));
    }
  }
  return out;
}

RelationVerdict unit_relation(std::size_t m, const std::string& why) {
  RelationVerdict v;
  v.kind = RelationKind::RelationFound;
  v.relation.assign(m, BigInt(0));
  v.relation[0] = 1;
  v.residual = 0;
  v.complete = true;
  v.height = 1;
  v.note = why;
  return v;
}

// Exact decision for one degree: rational tables go to the kernel over Q
// directly, surd tables through their sqrt-basis coordinates.
RelationVerdict exact_degree(const std::vector<MinorTable>& tabs,
                             bool all_rational) {
  if (all_rational) {
    std::vector<std::vector<CxRat>> rats;
    rats.reserve(tabs.size());
    for (const auto& t : tabs) rats.push_back(t.rational_values());
    return exact_relation(rats);
  }
  auto coords = surd_coordinate_tables(tabs);
  if (coords.empty())
    return unit_relation(tabs.front().exact.size(),
                         "all tables vanish identically; any unit vector is a relation");
  RelationVerdict v = exact_relation(coords);
  v.note += " (surd-basis coordinates)";
  return v;
}

// Numeric decision for one degree: per-table sufficient certificates first,
// then the full simultaneous search.  fast_form reports which single table
// settled it, -1 if the stacked search ran.
RelationVerdict numeric_degree(const std::vector<MinorTable>& tabs,
                               const RelationOptions& opt, int* fast_form) {
  *fast_form = -1;
  auto shared = std::make_shared<std::vector<MinorTable>>(tabs);
  ScopedPrecision prec(opt.precision_bits);

  std::vector<ValueVector> values;
  values.reserve(tabs.size());
  for (const auto& t : tabs) values.push_back(t.values());

  // one table without relations rules out simultaneous relations
  for (std::size_t j = 0; j < tabs.size(); ++j) {
    RelationOptions single = opt;
    single.reevaluate = [shared, j](unsigned bits) {
      ScopedPrecision p2(bits);
      return std::vector<ValueVector>{(*shared)[j].values()};
    };
    RelationVerdict v = integer_relation(values[j], single);
    if (v.kind == RelationKind::NoRelationUpToHeight) {
      *fast_form = static_cast<int>(j);
      return v;
    }
  }

  RelationOptions all = opt;
  all.reevaluate = [shared](unsigned bits) {
    ScopedPrecision p2(bits);
    std::vector<ValueVector> vv;
    vv.reserve(shared->size());
    for (const auto& t : *shared) vv.push_back(t.values());
    return vv;
  };
  return simultaneous_relation(values, all);
}

}  // namespace

TranscendenceVerdict is_transcendental(const ComplexLattice& Lc,
                                       const RelationOptions& opt,
                                       KernelMode mode) {
  TranscendenceVerdict out;
  out.height = opt.height;
  out.precision_bits = opt.precision_bits;

  if (Lc.n == 1) {
    out.overall = TransKind::TranscendentalUpToHeight;
    out.complete = true;
    out.mode = KernelMode::Exact;
    out.note = "n = 1: no degree 0 < k < 1 exists, the kernel condition is vacuous";
    return out;
  }

  std::vector<std::vector<MinorTable>> per_degree;
  bool all_rational = true;
  for (int k = 1; k < Lc.n; ++k) {
    per_degree.push_back(minor_tables(Lc, k));
    for (const auto& t : per_degree.back()) all_rational &= t.rational;
  }
  if (mode == KernelMode::Auto)
    mode = all_rational ? KernelMode::Exact : KernelMode::Numeric;
  out.mode = mode;

  bool any_relation = false, any_inconclusive = false, all_complete = true;
  for (int k = 1; k < Lc.n; ++k) {
    const auto& tabs = per_degree[k - 1];
    DegreeResult dr;
    dr.k = k;
    dr.table_count = static_cast<int>(tabs.size());
    if (mode == KernelMode::Exact) {
      bool deg_rational = true;
      for (const auto& t : tabs) deg_rational &= t.rational;
      dr.verdict = exact_degree(tabs, deg_rational);
    } else {
      dr.verdict = numeric_degree(tabs, opt, &dr.fast_form);
    }
    switch (dr.verdict.kind) {
      case RelationKind::RelationFound:
        any_relation = true;
        all_complete &= dr.verdict.complete;
        break;
      case RelationKind::NoRelationUpToHeight:
        all_complete &= dr.verdict.complete;
        break;
      case RelationKind::Inconclusive:
        any_inconclusive = true;
        all_complete = false;
        break;
    }
    out.degrees.push_back(std::move(dr));
  }

  if (any_relation) {
    out.overall = TransKind::NotTranscendental;
    // completeness of the failing degree's certificate is what matters
    out.complete = true;
    for (const auto& d : out.degrees)
      if (d.verdict.kind == RelationKind::RelationFound)
        out.complete = out.complete && d.verdict.complete;
    out.note = "a simultaneous integer relation kills some degree's minor tables";
  } else if (any_inconclusive) {
    out.overall = TransKind::Inconclusive;
    out.complete = false;
    out.note = "some degree could not be certified either way at this height/precision";
  } else {
    out.overall = TransKind::TranscendentalUpToHeight;
    out.complete = all_complete;
    out.note = all_complete
                   ? "trivial kernel at every degree (exact)"
                   : "no simultaneous relation at any degree up to the height bound";
  }
  return out;
}

TranscendenceVerdict is_transcendental(const Lattice& L,
                                       const RelationOptions& opt,
                                       KernelMode mode) {
  return is_transcendental(complexify(L), opt, mode);
}

std::vector<Cx<QuadExpr>> n2_minors(const ComplexLattice& Lc) {
  if (Lc.n != 2)
    throw DimensionMismatch("n2_minors: shortcut is specific to n = 2");
  std::vector<Cx<QuadExpr>> out;
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k)
      out.push_back(Lc.entry(0, j) * Lc.entry(1, k) -
                    Lc.entry(0, k) * Lc.entry(1, j));
  return out;
}

ValueVector n2_shortcut(const ComplexLattice& Lc) {
  ValueVector out;
  for (const auto& v : n2_minors(Lc))
    out.push_back({v.re.value(), v.im.value()});
  return out;
}

ProductLatticeCheck product_lattice_check(const std::string& a,
                                          const std::string& b,
                                          const std::string& c,
                                          const std::string& d,
                                          const RelationOptions& opt) {
  QuadExpr ea = parse_entry_literal(a), eb = parse_entry_literal(b);
  QuadExpr ec = parse_entry_literal(c), ed = parse_entry_literal(d);

  ProductLatticeCheck out;
  out.det = ea * ed - eb * ec;
  // entry literals always land in the surd ring, so irrationality is a
  // structural test and |det| vs 1/2 reduces to two exact signs
  out.det_irrational = !out.det.is_rational();

  QuadExpr half{Rational(1, 2)};
  ScopedPrecision prec(opt.precision_bits);
  out.det_below_half =
      sign(out.det - half, opt.precision_bits) < 0 &&
      sign(out.det + half, opt.precision_bits) > 0;

  // Z-linear independence of {a,b,c,d}: kernel over Q of the coefficient
  // matrix in the sqrt-basis coordinates (one table per basis element)
  std::vector<QuadExpr> entries{ea, eb, ec, ed};
  std::set<std::uint64_t> keys;
  for (const auto& e : entries)
    for (const auto& [f, cf] : e.terms()) keys.insert(f);
  std::vector<std::vector<CxRat>> coords;
  for (std::uint64_t f : keys) {
    std::vector<CxRat> row;
    for (const auto& e : entries) row.push_back({e.coeff(f), Rational(0)});
    coords.push_back(std::move(row));
  }
  out.independence = coords.empty()
                         ? unit_relation(4, "all four entries are zero")
                         : exact_relation(coords);
  out.entries_independent =
      out.independence.kind == RelationKind::NoRelationUpToHeight;

  out.certified =
      out.det_irrational && out.entries_independent && out.det_below_half;
  out.complete = true;  // every condition above was decided exactly
  std::ostringstream note;
  note << "ad-bc = " << out.det.str() << "; "
       << (out.det_irrational ? "irrational" : "rational") << ", entries "
       << (out.entries_independent ? "Z-independent" : "Z-dependent")
       << ", |ad-bc| " << (out.det_below_half ? "<" : ">=") << " 1/2; "
       << (out.certified
               ? "frame certified"
               : "not certified by this criterion (no claim that the frame fails)");
  out.note = note.str();
  return out;
}

GenericityReport genericity_sample(const GenericityOptions& opt) {
  if (opt.trials < 1) throw BadRange("genericity_sample: need trials >= 1");
  if (opt.n < 2)
    throw BadRange("genericity_sample: n >= 2 (n = 1 is vacuous)");

  GenericityReport rep;
  rep.trials = opt.trials;
  rep.seed = opt.seed;
  SplitMix64 rng(opt.seed);
  const int dim = 2 * opt.n;

  for (int t = 0; t < opt.trials; ++t) {
    TrialOutcome oc;
    oc.trial = t;
    oc.rng_state = rng.state;

    Eigen::MatrixXd M(dim, dim);
    do {
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) M(r, c) = rng.uniform_sym();
    } while (std::abs(M.determinant()) < 1e-9);
    if (opt.inject) opt.inject(t, M);

    Lattice L = make_lattice(opt.n, M);
    TranscendenceVerdict v =
        is_transcendental(L, opt.relation, KernelMode::Numeric);
    oc.kind = v.overall;
    switch (v.overall) {
      case TransKind::TranscendentalUpToHeight: ++rep.transcendental; break;
      case TransKind::NotTranscendental: ++rep.not_transcendental; break;
      case TransKind::Inconclusive: ++rep.inconclusive; break;
    }
    if (v.overall != TransKind::TranscendentalUpToHeight)
      rep.failures.push_back(oc);
  }
  rep.pass_fraction = static_cast<double>(rep.transcendental) / rep.trials;
  return rep;
}

GenericityReport genericity_sample(int trials, const BigInt& height,
                                   unsigned precision_bits,
                                   std::uint64_t seed) {
  GenericityOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  opt.relation.height = height;
  opt.relation.precision_bits = precision_bits;
  return genericity_sample(opt);
}

}  // namespace gaborcert
