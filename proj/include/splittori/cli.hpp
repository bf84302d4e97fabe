#pragma once

/// @file cli.hpp
/// Command-line front end. `run_cli` is separate from `main` so tests can drive it.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "splittori/json_io.hpp"
#include "splittori/svg.hpp"

namespace splittori {

namespace detail {

inline Scalar default_alpha(const std::vector<Point>& pts) {
  Scalar a(1);
  for (const Point& p : pts) a = max(a, r_value(p) + Scalar(1));
  return a;
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open '" + path + "' for writing");
  f << text;
}

inline std::string matrices_text(const std::vector<IntMatrix2>& ms) {
  std::string s;
  for (std::size_t i = 0; i < ms.size(); ++i) s += (i ? ", " : "") + format_matrix(ms[i]);
  return s.empty() ? "(none)" : s;
}

inline std::string render_grid_svg(const Scalar& alpha, const Scalar& delta, std::uint64_t n, std::uint64_t g) {
  RenderSpec spec;
  spec.alpha = alpha;
  spec.show_q = false;
  std::string base = render_svg(spec);
  std::ostringstream cells;
  double w = 1.0 + alpha.to_double();
  double a = alpha.to_double();
  double scale = (spec.width - 2.0 * spec.margin) / (2.0 * w);
  double cw = 2.0 * w * scale / static_cast<double>(g);
  double ch = 2.0 * a * scale / static_cast<double>(g);
  grid_scan(alpha, delta, n, g, [&](std::uint64_t i, std::uint64_t j, const Point&, GridStatus s) {
    if (s == GridStatus::Good) return;
    const char* colour = s == GridStatus::Burned ? "#444444" : (s == GridStatus::Repeats ? "#e67e22" : "#c0392b");
    cells << "<rect class=\"" << grid_status_name(s) << "\" x=\""
          << SvgCanvas::num(spec.margin + static_cast<double>(i) * cw) << "\" y=\""
          << SvgCanvas::num(spec.margin + static_cast<double>(g - 1 - j) * ch) << "\" width=\"" << SvgCanvas::num(cw)
          << "\" height=\"" << SvgCanvas::num(ch) << "\" fill=\"" << colour << "\"/>\n";
  });
  std::size_t pos = base.rfind("</svg>");
  return base.substr(0, pos) + cells.str() + base.substr(pos);
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 on domain or parse errors in the inputs, 2 on usage errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classification of split tori by 45-degree billiards", "splittori"};
  app.require_subcommand(1);
  std::uint64_t max_steps = max_steps_from_env();

  std::string p1, p2, alpha_text;
  bool json = false;
  auto add_common = [&](CLI::App* sub, int points) {
    if (points >= 1) sub->add_option("point", p1, "base point \"(x,y)\"")->required();
    if (points >= 2) sub->add_option("other", p2, "second base point \"(x,y)\"")->required();
    sub->add_option("--alpha", alpha_text, "rectangle parameter (default max(r(p)+1, 1))");
    sub->add_flag("--json", json, "print JSON");
  };

  auto* classify = app.add_subcommand("classify", "decide Hamiltonian equivalence of two split tori");
  add_common(classify, 2);

  std::int64_t count = 10;
  std::int64_t backward = 0;
  std::string svg_path;
  auto* trajectory = app.add_subcommand("trajectory", "indexed admissible bouncing points");
  add_common(trajectory, 1);
  trajectory->add_option("--count", count, "last forward index")->check(CLI::NonNegativeNumber);
  trajectory->add_option("--backward", backward, "number of backward indices")->check(CLI::NonNegativeNumber);
  trajectory->add_option("--svg", svg_path, "write an SVG drawing");

  auto* monodromy = app.add_subcommand("monodromy", "Hamiltonian monodromy group");
  add_common(monodromy, 1);

  bool small_alpha = false;
  auto* packing = app.add_subcommand("packing", "toric and known packing numbers");
  add_common(packing, 1);
  packing->add_flag("--small-alpha", small_alpha, "assume alpha is small enough for the band rule");

  auto* balltype = app.add_subcommand("balltype", "ball-embeddability types");
  add_common(balltype, 1);

  auto* invariants = app.add_subcommand("invariants", "distance invariants (d, #, Gamma)");
  add_common(invariants, 1);

  auto* witness = app.add_subcommand("probe-witness", "probe chain between equivalent tori");
  add_common(witness, 2);

  std::string eps_text, delta_text, csv_path;
  std::uint64_t n_iter = 10;
  std::uint64_t grid = 200;
  auto* recurrence = app.add_subcommand("recurrence", "delta-billiard recurrence bound");
  recurrence->add_option("--alpha", alpha_text, "rectangle parameter")->required();
  recurrence->add_option("--epsilon", eps_text, "measure budget, used to choose delta");
  recurrence->add_option("--delta", delta_text, "cut-off width (overrides --epsilon)");
  recurrence->add_option("--N", n_iter, "number of iterates")->required();
  recurrence->add_option("--grid", grid, "grid resolution per axis")->check(CLI::PositiveNumber);
  recurrence->add_option("--csv", csv_path, "write per-cell status as CSV");
  recurrence->add_option("--svg", svg_path, "write a heat map of the grid");
  recurrence->add_flag("--json", json, "print JSON");

  std::string out_path;
  int cutoff = 0;
  int width = 640;
  bool no_sigma = false, no_q = false;
  auto* render = app.add_subcommand("render", "draw the rectangle with overlays as SVG");
  render->add_option("--alpha", alpha_text, "rectangle parameter");
  render->add_option("--point", p1, "trajectory base point");
  render->add_option("--count", count, "last forward trajectory index")->check(CLI::NonNegativeNumber);
  render->add_option("--monotone-cutoff", cutoff, "draw exceptional points up to this k")->check(CLI::NonNegativeNumber);
  render->add_option("--width", width, "image width in pixels")->check(CLI::Range(100, 10000));
  render->add_flag("--no-sigma", no_sigma, "hide Sigma");
  render->add_flag("--no-q", no_q, "hide the fundamental domain");
  render->add_option("--out", out_path, "output file (default stdout)");

  std::vector<std::string> argv_store{"splittori"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    auto point = [](const std::string& s) { return parse_point(s); };
    auto alpha_for = [&](const std::vector<Point>& pts) {
      return alpha_text.empty() ? detail::default_alpha(pts) : parse_scalar(alpha_text);
    };

    if (*classify || *witness) {
      Point a = point(p1);
      Point b = point(p2);
      Scalar alpha = alpha_for({a, b});
      EquivalenceVerdict v = equivalent(a, b, alpha);
      std::optional<std::vector<ProbeStep>> steps;
      if (v.equivalent) steps = witness_sequence(a, b, alpha, max_steps);
      if (*classify) {
        if (json) {
          Json j{{"alpha", alpha}, {"p", a}, {"q", b}, {"equivalent", v.equivalent}, {"reason", v.reason},
                 {"canonical_p", canonicalize(a, alpha)}, {"canonical_q", canonicalize(b, alpha)}};
          if (steps) j["witness"] = {{"steps", steps->size()}, {"monodromy", compose_monodromy(*steps)}};
          out << j.dump(2) << "\n";
        } else {
          out << "alpha = " << format_scalar(alpha) << "\n";
          out << (v.equivalent ? "EQUIVALENT" : "NOT EQUIVALENT (" + v.reason + ")") << "\n";
          out << "canonical " << format_point(a) << ": " << format_canonical(canonicalize(a, alpha)) << "\n";
          out << "canonical " << format_point(b) << ": " << format_canonical(canonicalize(b, alpha)) << "\n";
          if (steps)
            out << "witness: " << steps->size() << " probe(s), induced map " << format_matrix(compose_monodromy(*steps))
                << "\n";
        }
      } else {
        if (json) {
          Json j{{"alpha", alpha}, {"p", a}, {"q", b}, {"equivalent", v.equivalent}};
          j["steps"] = steps ? Json(*steps) : Json(nullptr);
          if (steps) j["monodromy"] = compose_monodromy(*steps);
          out << j.dump(2) << "\n";
        } else {
          out << "alpha = " << format_scalar(alpha) << "\n";
          if (!steps) {
            out << "no witness: " << v.reason << "\n";
          } else {
            for (std::size_t i = 0; i < steps->size(); ++i) {
              const auto& s = (*steps)[i];
              out << i + 1 << ": " << format_point(s.from) << " -> " << format_point(s.to) << "  direction ("
                  << s.probe.direction.dx << "," << s.probe.direction.dy << ") " << edge_name(s.probe.start_edge)
                  << "-" << edge_name(s.probe.end_edge) << "  " << format_matrix(s.matrix) << "\n";
            }
            out << "composed: " << format_matrix(compose_monodromy(*steps)) << "\n";
          }
        }
      }
      return 0;
    }

    if (*trajectory) {
      Point p = point(p1);
      Scalar alpha = alpha_for({p});
      require_interior(p, alpha);
      Trajectory t = bouncing_points(p, -backward, count, max_steps);
      std::optional<std::int64_t> period = trajectory_period(p, max_steps);
      if (!svg_path.empty()) {
        RenderSpec spec;
        spec.alpha = alpha;
        spec.trajectory = t;
        detail::write_file(svg_path, render_svg(spec));
      }
      if (json) {
        Json j{{"alpha", alpha}, {"trajectory", t}};
        j["period"] = period ? Json(*period) : Json(nullptr);
        out << j.dump(2) << "\n";
      } else {
        out << "alpha = " << format_scalar(alpha) << "\nr = " << format_scalar(t.r) << "\n";
        out << "period = " << (period ? std::to_string(*period) : std::string("none")) << "\n";
        if (t.stationary) out << "stationary\n";
        for (std::int64_t k = t.k_min; k <= t.k_max; ++k) out << k << ": " << format_point(t.at(k)) << "\n";
        for (const auto& h : t.corner_hits)
          out << "corner " << format_point(h.corner) << " between " << h.from << " and " << h.to << "\n";
      }
      return 0;
    }

    if (*monodromy) {
      Point p = point(p1);
      Scalar alpha = alpha_for({p});
      MonodromyGroup g = monodromy_group(p, alpha, max_steps);
      if (json) {
        out << Json{{"alpha", alpha}, {"point", p}, {"group", g}}.dump(2) << "\n";
      } else {
        out << "alpha = " << format_scalar(alpha) << "\n";
        out << "case " << case_name(g.case_tag) << ", " << iso_name(g.iso_type) << ", " << exactness_name(g.exactness)
            << "\n";
        out << "generators: " << detail::matrices_text(g.generators) << "\n";
        if (g.exactness == Exactness::UpperBound)
          out << "realised by probe loops: " << detail::matrices_text(g.lower_bound_generators) << "\n";
      }
      return 0;
    }

    if (*packing) {
      Point p = point(p1);
      Scalar alpha = alpha_for({p});
      PackingReport r = packing_report(p, alpha, small_alpha);
      if (json) {
        out << Json{{"alpha", alpha}, {"point", p}, {"packing", packing_to_json(r)}}.dump(2) << "\n";
      } else {
        out << "alpha = " << format_scalar(alpha) << "\n";
        out << "toric=" << r.toric.str() << "\n";
        if (r.ps_bound) out << "ps_upper_bound=" << r.ps_bound->get_str() << "\n";
        if (r.known)
          out << "known=" << r.known->value.str() << " (" << source_name(r.known->source) << ")\n";
        else
          out << "known=unknown\n";
      }
      return 0;
    }

    if (*balltype) {
      Point p = point(p1);
      Scalar alpha = alpha_for({p});
      BallTypes b = ball_type(p, alpha);
      if (json) {
        out << Json{{"alpha", alpha}, {"point", p}, {"ball_type", b}}.dump(2) << "\n";
      } else {
        out << "alpha = " << format_scalar(alpha) << "\n";
        out << "clifford=" << b.clifford << "\nchekanov=" << b.chekanov << "\nnonmonotone=" << b.nonmonotone << "\n";
      }
      return 0;
    }

    if (*invariants) {
      Point p = point(p1);
      Scalar alpha = alpha_for({p});
      ChekanovInvariants c = chekanov_invariants(p, alpha);
      if (json) {
        out << Json{{"alpha", alpha}, {"point", p}, {"invariants", c}}.dump(2) << "\n";
      } else {
        out << "alpha = " << format_scalar(alpha) << "\n";
        out << "ell = (" << format_scalar(c.ell[0]) << ", " << format_scalar(c.ell[1]) << ", "
            << format_scalar(c.ell[2]) << ", " << format_scalar(c.ell[3]) << ")\n";
        out << "d = " << format_scalar(c.d) << "\nfacets = {";
        for (std::size_t i = 0; i < c.index_set.size(); ++i) out << (i ? "," : "") << c.index_set[i];
        out << "}\nGamma = " << format_gamma(c.gamma) << "\n";
      }
      return 0;
    }

    if (*recurrence) {
      Scalar alpha = parse_scalar(alpha_text);
      require_alpha(alpha);
      Scalar delta;
      std::optional<Scalar> eps;
      if (!delta_text.empty()) {
        delta = parse_scalar(delta_text);
      } else if (!eps_text.empty()) {
        eps = parse_scalar(eps_text);
        delta = delta_for(*eps, n_iter, alpha);
      } else {
        err << "recurrence: one of --epsilon or --delta is required\n";
        return 2;
      }
      Scalar vol = cutoff_volume(alpha, delta);
      std::uint64_t good = 0;
      std::ostringstream csv;
      csv << "i,j,x,y,status\n";
      grid_scan(alpha, delta, n_iter, grid, [&](std::uint64_t i, std::uint64_t j, const Point& p, GridStatus s) {
        if (s == GridStatus::Good) ++good;
        if (!csv_path.empty())
          csv << i << "," << j << "," << format_scalar(p.x) << "," << format_scalar(p.y) << "," << grid_status_name(s)
              << "\n";
      });
      Rational fraction(static_cast<unsigned long>(good), static_cast<unsigned long>(grid * grid));
      fraction.canonicalize();
      Scalar bound = Scalar(1) - Scalar(Rational(static_cast<unsigned long>(n_iter + 1))) * vol;
      if (!csv_path.empty()) detail::write_file(csv_path, csv.str());
      if (!svg_path.empty()) detail::write_file(svg_path, detail::render_grid_svg(alpha, delta, n_iter, grid));
      if (json) {
        Json j{{"alpha", alpha}, {"N", n_iter}, {"delta", delta}, {"volume", vol}, {"grid", grid},
               {"fraction", Scalar(fraction)}, {"bound", bound}};
        j["epsilon"] = eps ? Json(*eps) : Json(nullptr);
        out << j.dump(2) << "\n";
      } else {
        out << "alpha = " << format_scalar(alpha) << "\nN = " << n_iter << "\ndelta = " << format_scalar(delta)
            << "\nvolume = " << format_scalar(vol) << " (~" << vol.to_double() << ")\n";
        out << "fraction = " << fraction.get_str() << " (~" << fraction.get_d() << ")\n";
        out << "1 - (N+1)*volume = " << format_scalar(bound) << " (~" << bound.to_double() << ")\n";
      }
      return 0;
    }

    if (*render) {
      RenderSpec spec;
      std::vector<Point> pts;
      if (!p1.empty()) pts.push_back(point(p1));
      spec.alpha = alpha_text.empty() ? (pts.empty() ? Scalar(2) : detail::default_alpha(pts)) : parse_scalar(alpha_text);
      spec.width = width;
      spec.show_sigma = !no_sigma;
      spec.show_q = !no_q;
      spec.monotone_cutoff = cutoff;
      if (!pts.empty()) {
        require_interior(pts[0], spec.alpha);
        spec.trajectory = bouncing_points(pts[0], 0, count, max_steps);
      }
      std::string svg = render_svg(spec);
      if (out_path.empty())
        out << svg;
      else
        detail::write_file(out_path, svg);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace splittori
