#pragma once

// Exhaustive exploration of PG(2,p).

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "qqplane/error.hpp"
#include "qqplane/harmonicity.hpp"
#include "qqplane/incidence.hpp"
#include "qqplane/scalar_field.hpp"

namespace qqplane {

/// All points and lines of PG(2,p) in canonical form.
///
/// Both lists are ordered colexicographically on residues (last coordinate
/// most significant), which puts (1,0,0), (0,1,0), (0,0,1) ahead of every
/// point off the reference triangle and (1,1,1) first among those.
struct PlaneCatalog {
  FieldSpec field;
  std::vector<Point> points;
  std::vector<Line> lines;
  /// on_line[l][x]: point x lies on line l.
  std::vector<std::vector<bool>> on_line;
  /// line_through[x][y]: index of the line joining points x != y.
  std::vector<std::vector<std::uint32_t>> line_through;

  std::size_t order() const noexcept { return points.size(); }

  bool collinear_indices(std::size_t a, std::size_t b, std::size_t c) const {
    return on_line[line_through[a][b]][c];
  }
};

namespace detail {

inline std::vector<HomTriple> all_triples(const Field& field, Role role) {
  const auto elements = field.elements();
  std::vector<HomTriple> out;
  const std::size_t p = elements.size();
  out.reserve(p * p + p + 1);
  // Canonical forms are (1,a,b), (0,1,b), (0,0,1).
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < p; ++b) out.push_back(normalize({field.one(), elements[a], elements[b]}, role));
  }
  for (std::size_t b = 0; b < p; ++b) out.push_back(normalize({field.zero(), field.one(), elements[b]}, role));
  out.push_back(normalize({field.zero(), field.zero(), field.one()}, role));
  std::sort(out.begin(), out.end(), [](const HomTriple& x, const HomTriple& y) {
    return std::make_tuple(x[2].residue(), x[1].residue(), x[0].residue()) <
           std::make_tuple(y[2].residue(), y[1].residue(), y[0].residue());
  });
  return out;
}

}  // namespace detail

inline PlaneCatalog enumerate_plane(std::uint64_t p) {
  const Field field = Field::prime(p);
  PlaneCatalog cat{field.spec(), detail::all_triples(field, Role::Point), detail::all_triples(field, Role::Line), {},
                   {}};
  const std::size_t n = cat.points.size();
  cat.on_line.assign(n, std::vector<bool>(n, false));
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t x = 0; x < n; ++x) cat.on_line[l][x] = incident(cat.points[x], cat.lines[l]);
  }
  cat.line_through.assign(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t l = 0; l < n; ++l) {
    std::vector<std::size_t> pts;
    for (std::size_t x = 0; x < n; ++x) {
      if (cat.on_line[l][x]) pts.push_back(x);
    }
    for (std::size_t x : pts) {
      for (std::size_t y : pts) cat.line_through[x][y] = static_cast<std::uint32_t>(l);
    }
  }
  return cat;
}

/// Catalog indices of a quadrangle, ascending.
using QuadrangleIndex = std::array<std::size_t, 4>;

/// Visits every general-position 4-subset once, vertices in catalog order,
/// lexicographically by index tuple. Only subsets whose smallest index lies
/// in [first_begin, first_end) are visited, so disjoint ranges partition the
/// stream. `visit(index, quadrangle)` returns false to stop early; the return
/// value reports whether the walk ran to completion.
template <class Visitor>
bool for_each_quadrangle(const PlaneCatalog& cat, Visitor&& visit, std::size_t first_begin = 0,
                         std::size_t first_end = SIZE_MAX) {
  const std::size_t n = cat.order();
  first_end = std::min(first_end, n);
  for (std::size_t a = first_begin; a < first_end; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (cat.collinear_indices(a, b, c)) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (cat.collinear_indices(a, b, d) || cat.collinear_indices(a, c, d) || cat.collinear_indices(b, c, d)) {
            continue;
          }
          const QuadrangleIndex ix{a, b, c, d};
          if (!visit(ix, CompleteQuadrangle({cat.points[a], cat.points[b], cat.points[c], cat.points[d]}))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

inline std::vector<CompleteQuadrangle> enumerate_quadrangles(const PlaneCatalog& cat) {
  std::vector<CompleteQuadrangle> out;
  for_each_quadrangle(cat, [&](const QuadrangleIndex&, const CompleteQuadrangle& q) {
    out.push_back(q);
    return true;
  });
  return out;
}

enum class Dichotomy { AllCollinear, NoneCollinear, Mixed };

constexpr std::string_view dichotomy_name(Dichotomy d) noexcept {
  switch (d) {
    case Dichotomy::AllCollinear: return "AllCollinear";
    case Dichotomy::NoneCollinear: return "NoneCollinear";
    case Dichotomy::Mixed: return "Mixed";
  }
  return "Mixed";
}

struct SurveyReport {
  std::uint64_t p = 0;
  std::uint64_t quadrangle_count = 0;
  std::uint64_t collinear_diagonal_count = 0;
  Dichotomy dichotomy = Dichotomy::Mixed;
  std::optional<QQPair> witness;
};

inline constexpr std::uint64_t kDefaultMaxP = 13;

/// Exhaustion guard from QQ_PLANE_MAX_P, else the default.
inline std::uint64_t max_p_from_env() {
  if (const char* env = std::getenv("QQ_PLANE_MAX_P"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0') return v;
  }
  return kDefaultMaxP;
}

struct SurveyOptions {
  std::uint64_t max_p = kDefaultMaxP;
  unsigned workers = 1;
};

namespace detail {

inline void check_survey_prime(std::uint64_t p, std::uint64_t max_p) {
  if (!is_prime_number(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p > max_p) {
    throw Error(Errc::PlaneTooLarge, "p = " + std::to_string(p) + " exceeds the exhaustion guard " +
                                         std::to_string(max_p));
  }
}

struct ChunkTally {
  std::uint64_t quadrangles = 0;
  std::uint64_t collinear = 0;
  std::optional<QuadrangleIndex> first_noncollinear;
};

inline ChunkTally tally_chunk(const PlaneCatalog& cat, std::size_t begin, std::size_t end) {
  ChunkTally t;
  for_each_quadrangle(
      cat,
      [&](const QuadrangleIndex& ix, const CompleteQuadrangle& q) {
        ++t.quadrangles;
        const auto d = diagonal_points(q);
        if (collinear(d[0], d[1], d[2])) {
          ++t.collinear;
        } else if (!t.first_noncollinear) {
          t.first_noncollinear = ix;
        }
        return true;
      },
      begin, end);
  return t;
}

inline CompleteQuadrangle quadrangle_at(const PlaneCatalog& cat, const QuadrangleIndex& ix) {
  return CompleteQuadrangle({cat.points[ix[0]], cat.points[ix[1]], cat.points[ix[2]], cat.points[ix[3]]});
}

}  // namespace detail

/// Counts quadrangles of PG(2,p) and those with collinear diagonal points.
/// The first-index range is split round-robin across `workers` async tasks;
/// chunk tallies merge associatively, so the report does not depend on the
/// split.
inline SurveyReport survey_diagonals(std::uint64_t p, const SurveyOptions& options = {}) {
  detail::check_survey_prime(p, options.max_p);
  const PlaneCatalog cat = enumerate_plane(p);
  const std::size_t n = cat.order();
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(n)));

  std::vector<std::future<std::vector<detail::ChunkTally>>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async, [&cat, n, w, workers] {
      std::vector<detail::ChunkTally> tallies;
      for (std::size_t a = w; a < n; a += workers) tallies.push_back(detail::tally_chunk(cat, a, a + 1));
      return tallies;
    }));
  }

  SurveyReport report;
  report.p = p;
  std::optional<QuadrangleIndex> first;
  for (auto& job : jobs) {
    for (const auto& t : job.get()) {
      report.quadrangle_count += t.quadrangles;
      report.collinear_diagonal_count += t.collinear;
      if (t.first_noncollinear && (!first || *t.first_noncollinear < *first)) first = t.first_noncollinear;
    }
  }

  if (report.collinear_diagonal_count == report.quadrangle_count) {
    report.dichotomy = Dichotomy::AllCollinear;
  } else if (report.collinear_diagonal_count == 0) {
    report.dichotomy = Dichotomy::NoneCollinear;
  } else {
    report.dichotomy = Dichotomy::Mixed;
  }

  if (report.dichotomy == Dichotomy::NoneCollinear) {
    QQPair pair = companion_pair(detail::quadrangle_at(cat, *first));
    if (!is_qq_configuration(pair.quadrangle, pair.quadrilateral)) {
      throw detail::invariant("survey witness fails the configuration relations");
    }
    report.witness = std::move(pair);
  }
  return report;
}

enum class WitnessMode { Configuration, Mated };

/// First quadrangle in enumeration order with noncollinear diagonal points,
/// paired with its constructed quadrilateral; absent when none exists. The
/// mode picks which predicate is re-verified on the result, and the other one
/// must agree.
inline std::optional<QQPair> find_qq_witness(std::uint64_t p, WitnessMode mode,
                                             std::uint64_t max_p = kDefaultMaxP) {
  detail::check_survey_prime(p, max_p);
  const PlaneCatalog cat = enumerate_plane(p);
  std::optional<QQPair> found;
  for_each_quadrangle(cat, [&](const QuadrangleIndex&, const CompleteQuadrangle& q) {
    const auto d = diagonal_points(q);
    if (collinear(d[0], d[1], d[2])) return true;
    found = companion_pair(q);
    return false;
  });
  if (found) {
    const bool configuration = is_qq_configuration(found->quadrangle, found->quadrilateral);
    const bool mated = is_mated(found->quadrangle, found->quadrilateral);
    const bool requested = mode == WitnessMode::Configuration ? configuration : mated;
    if (!requested || configuration != mated) throw detail::invariant("witness fails re-verification");
  }
  return found;
}

}  // namespace qqplane
