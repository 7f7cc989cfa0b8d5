#pragma once

// Report-producing commands behind the qq-plane CLI. Each returns the report
// document and the process exit code: 0 when every verdict is true, 1 for a
// false verdict or absent witness, 2 on error.

#include <cstdint>
#include <exception>
#include <string>
#include <string_view>

#include "qqplane/error.hpp"
#include "qqplane/figure_io.hpp"
#include "qqplane/harmonicity.hpp"
#include "qqplane/survey.hpp"

namespace qqplane {

enum class CheckKind { Diagonals, QQ, Mated };
enum class ConstructDirection { ToQuadrilateral, ToQuadrangle };

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

struct CommandResult {
  Json report;
  int exit_code = kExitError;
};

/// Skeleton with the fixed key order: schema, command, field, verdicts,
/// figures, diagnostics.
inline Json new_report(Json command, const std::optional<FieldSpec>& field = std::nullopt) {
  Json r;
  r["schema"] = kSchema;
  r["command"] = std::move(command);
  r["field"] = field ? to_json(*field) : Json(nullptr);
  r["verdicts"] = Json::object();
  r["figures"] = Json::object();
  r["diagnostics"] = Json::array();
  return r;
}

inline Json diagnostic(const Error& e) {
  Json d;
  d["error"] = errc_name(e.code());
  d["message"] = e.detail();
  if (const auto* c = dynamic_cast<const DiagonalsCollinearError*>(&e)) {
    d["regime"] = "characteristic-2 collapse";
    d["witness_line"] = to_json(c->line());
  } else if (const auto* c = dynamic_cast<const DiagonalsConcurrentError*>(&e)) {
    d["regime"] = "characteristic-2 collapse";
    d["witness_point"] = to_json(c->point());
  }
  return d;
}

/// Records `e` and sets the error exit code.
inline CommandResult fail(Json report, const Error& e) {
  report["diagnostics"].push_back(diagnostic(e));
  return {std::move(report), kExitError};
}

inline int exit_code_from_verdicts(const Json& report) {
  for (const auto& [name, v] : report["verdicts"].items()) {
    if (!v.get<bool>()) return kExitFalse;
  }
  return kExitTrue;
}

constexpr std::string_view check_kind_name(CheckKind k) noexcept {
  switch (k) {
    case CheckKind::Diagonals: return "diagonals";
    case CheckKind::QQ: return "qq";
    case CheckKind::Mated: return "mated";
  }
  return "?";
}

constexpr std::string_view direction_name(ConstructDirection d) noexcept {
  return d == ConstructDirection::ToQuadrilateral ? "to-quadrilateral" : "to-quadrangle";
}

constexpr std::string_view witness_mode_name(WitnessMode m) noexcept {
  return m == WitnessMode::Configuration ? "configuration" : "mated";
}

inline CommandResult cmd_check(const FigureDocument& doc, CheckKind which) {
  Json report = new_report(Json{{"name", "check"}, {"which", check_kind_name(which)}}, doc.field);
  try {
    auto& verdicts = report["verdicts"];
    auto& figures = report["figures"];
    if (which == CheckKind::Diagonals) {
      if (!doc.quadrangle && !doc.quadrilateral) {
        throw Error(Errc::MissingFigure, "diagonals check needs a quadrangle or a quadrilateral");
      }
      if (doc.quadrangle) {
        figures["diagonal_points"] = to_json(diagonal_points(*doc.quadrangle));
        try {
          figures["diagonal_lines"] = to_json(diagonal_triangle(*doc.quadrangle).lines);
          verdicts["diagonal_points_noncollinear"] = true;
        } catch (const DiagonalsCollinearError& e) {
          figures["collinearity_line"] = to_json(e.line());
          verdicts["diagonal_points_noncollinear"] = false;
        }
      }
      if (doc.quadrilateral) {
        figures["quadrilateral_diagonal_lines"] = to_json(diagonal_lines(*doc.quadrilateral));
        try {
          figures["quadrilateral_diagonal_points"] = to_json(diagonal_triangle(*doc.quadrilateral).points);
          verdicts["diagonal_lines_nonconcurrent"] = true;
        } catch (const DiagonalsConcurrentError& e) {
          figures["concurrency_point"] = to_json(e.point());
          verdicts["diagonal_lines_nonconcurrent"] = false;
        }
      }
    } else {
      if (!doc.quadrangle || !doc.quadrilateral) {
        throw Error(Errc::MissingFigure, std::string(check_kind_name(which)) +
                                             " check needs both a quadrangle and a quadrilateral");
      }
      if (which == CheckKind::QQ) {
        verdicts["qq_configuration"] = is_qq_configuration(*doc.quadrangle, *doc.quadrilateral);
      } else {
        verdicts["mated"] = is_mated(*doc.quadrangle, *doc.quadrilateral);
      }
    }
  } catch (const Error& e) {
    return fail(std::move(report), e);
  }
  const int code = exit_code_from_verdicts(report);
  return {std::move(report), code};
}

inline CommandResult cmd_construct(const FigureDocument& doc, ConstructDirection direction) {
  Json report = new_report(Json{{"name", "construct"}, {"direction", direction_name(direction)}}, doc.field);
  try {
    auto& verdicts = report["verdicts"];
    auto& figures = report["figures"];
    if (direction == ConstructDirection::ToQuadrilateral) {
      if (!doc.quadrangle) throw Error(Errc::MissingFigure, "construct to-quadrilateral needs a quadrangle");
      const CompleteQuadrangle& q = *doc.quadrangle;
      const CompleteQuadrilateral s = construct_quadrilateral(q);
      figures["quadrilateral"] = to_json(s);
      figures["diagonal_triangle"] = to_json(diagonal_triangle(q));
      verdicts["qq_configuration"] = is_qq_configuration(q, s);
      verdicts["mated"] = is_mated(q, s);
      verdicts["roundtrip"] = construct_quadrangle(s) == q;
    } else {
      if (!doc.quadrilateral) throw Error(Errc::MissingFigure, "construct to-quadrangle needs a quadrilateral");
      const CompleteQuadrilateral& s = *doc.quadrilateral;
      const CompleteQuadrangle q = construct_quadrangle(s);
      figures["quadrangle"] = to_json(q);
      figures["diagonal_triangle"] = to_json(diagonal_triangle(s));
      verdicts["qq_configuration"] = is_qq_configuration(q, s);
      verdicts["mated"] = is_mated(q, s);
      verdicts["roundtrip"] = construct_quadrilateral(q) == s;
    }
  } catch (const Error& e) {
    return fail(std::move(report), e);
  }
  const int code = exit_code_from_verdicts(report);
  return {std::move(report), code};
}

inline CommandResult cmd_survey(std::uint64_t p, const SurveyOptions& options) {
  Json report = new_report(Json{{"name", "survey"}, {"p", p}});
  try {
    report["field"] = to_json(Field::prime(p).spec());
  } catch (const Error& e) {
    return fail(std::move(report), e);
  }
  try {
    const SurveyReport s = survey_diagonals(p, options);
    Json summary;
    summary["p"] = s.p;
    summary["quadrangle_count"] = s.quadrangle_count;
    summary["collinear_diagonal_count"] = s.collinear_diagonal_count;
    summary["dichotomy"] = dichotomy_name(s.dichotomy);
    report["survey"] = std::move(summary);
    report["verdicts"]["witness_found"] = s.witness.has_value();
    report["figures"]["witness"] = s.witness ? to_json(*s.witness) : Json(nullptr);
  } catch (const Error& e) {
    return fail(std::move(report), e);
  }
  const int code = exit_code_from_verdicts(report);
  return {std::move(report), code};
}

inline CommandResult cmd_witness(std::uint64_t p, WitnessMode mode, std::uint64_t max_p = kDefaultMaxP) {
  Json report = new_report(Json{{"name", "witness"}, {"p", p}, {"mode", witness_mode_name(mode)}});
  try {
    report["field"] = to_json(Field::prime(p).spec());
    const auto w = find_qq_witness(p, mode, max_p);
    auto& verdicts = report["verdicts"];
    verdicts["witness_found"] = w.has_value();
    if (w) {
      verdicts["qq_configuration"] = is_qq_configuration(w->quadrangle, w->quadrilateral);
      verdicts["mated"] = is_mated(w->quadrangle, w->quadrilateral);
    }
    report["figures"]["witness"] = w ? to_json(*w) : Json(nullptr);
  } catch (const Error& e) {
    return fail(std::move(report), e);
  }
  const int code = exit_code_from_verdicts(report);
  return {std::move(report), code};
}

/// The canonical quadrangle over Q next to the same coordinates over GF(2).
inline CommandResult cmd_fano_demo() {
  Json report = new_report(Json{{"name", "fano-demo"}});
  try {
    Json narrative = Json::array();
    const auto canonical = [](const Field& f) {
      return CompleteQuadrangle(
          {make_point(f, {1, 0, 0}), make_point(f, {0, 1, 0}), make_point(f, {0, 0, 1}), make_point(f, {1, 1, 1})});
    };

    const Field q_field = Field::rationals();
    const CompleteQuadrangle q = canonical(q_field);
    const auto q_diag = diagonal_points(q);
    const QQPair pair = companion_pair(q);
    Json rational;
    rational["field"] = to_json(q_field.spec());
    rational["quadrangle"] = to_json(q);
    rational["diagonal_points"] = to_json(q_diag);
    rational["determinant"] = detail::det3(q_diag[0].coords(), q_diag[1].coords(), q_diag[2].coords()).to_string();
    rational["diagonal_lines"] = to_json(pair.triangle.lines);
    rational["quadrilateral"] = to_json(pair.quadrilateral);
    narrative.push_back("over Q the diagonal points " + q_diag[0].to_string() + q_diag[1].to_string() +
                        q_diag[2].to_string() + " form a triangle and the companion quadrilateral is " +
                        pair.quadrilateral.describe());

    const Field f2 = Field::prime(2);
    const CompleteQuadrangle fano = canonical(f2);
    const auto f_diag = diagonal_points(fano);
    Json gf2;
    gf2["field"] = to_json(f2.spec());
    gf2["quadrangle"] = to_json(fano);
    gf2["diagonal_points"] = to_json(f_diag);
    gf2["determinant"] = detail::det3(f_diag[0].coords(), f_diag[1].coords(), f_diag[2].coords()).to_string();
    bool collapsed = false;
    try {
      construct_quadrilateral(fano);
    } catch (const DiagonalsCollinearError& e) {
      collapsed = true;
      gf2["collinearity_line"] = to_json(e.line());
      gf2["construction"] = errc_name(e.code());
      narrative.push_back("over GF(2) the same diagonal points lie on " + e.line().to_string() +
                          ", so no companion quadrilateral exists");
    }

    report["figures"]["rational"] = std::move(rational);
    report["figures"]["gf2"] = std::move(gf2);
    report["verdicts"]["rational_companion_verified"] =
        is_qq_configuration(pair.quadrangle, pair.quadrilateral) && is_mated(pair.quadrangle, pair.quadrilateral);
    report["verdicts"]["gf2_collapse_exhibited"] = collapsed;
    report["narrative"] = std::move(narrative);
  } catch (const Error& e) {
    return fail(std::move(report), e);
  }
  const int code = exit_code_from_verdicts(report);
  return {std::move(report), code};
}

}  // namespace qqplane
