#include "secmac/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "secmac/format.hpp"
#include "secmac/numerics.hpp"
#include "secmac/parallel.hpp"

namespace secmac {

void SweepConfig::validate() const {
  base.validate();
  if (!(step > 0.0)) throw std::invalid_argument("SweepConfig: step must be > 0");
  if (!(start <= stop)) throw std::invalid_argument("SweepConfig: start <= stop required");
  if (c12_list.empty()) throw std::invalid_argument("SweepConfig: c12_list must be nonempty");
  for (double c : c12_list)
    if (!(c >= 0.0) && !is_infinite_c12(c))
      throw std::invalid_argument("SweepConfig: c12 entries must be >= 0 or infinite");
}

double wiretap_baseline(const GaussianMacChannel& ch) {
  ch.validate();
  return clamp_plus(cap(ch.h1d * ch.h1d * ch.p1 / ch.sigma1_sq) -
                    cap(ch.h1e * ch.h1e * ch.p1 / ch.sigma2_sq));
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  cfg.validate();

  std::vector<double> ds;
  for (int k = 0;; ++k) {
    double d = cfg.start + k * cfg.step;
    if (d > cfg.stop + 1e-9) break;
    ds.push_back(std::min(d, cfg.stop));
  }
  std::vector<double> c12s = cfg.c12_list;
  std::sort(c12s.begin(), c12s.end());

  std::vector<SweepRow> rows(ds.size() * c12s.size());
  parallel_for(ds.size(), [&](size_t i) {
    NetworkGeometry g = cfg.base;
    g.pos_enc2 = {ds[i], 0.0};
    GaussianMacChannel ch = compile_geometry(g);

    BoundReport up = upper_bound(ch, cfg.bounds);
    double baseline = cfg.include_wiretap_baseline ? wiretap_baseline(ch) : -1.0;

    for (size_t j = 0; j < c12s.size(); ++j) {
      ch.c12 = c12s[j];
      BoundReport low = lower_bound(ch, cfg.bounds);
      SweepRow& row = rows[i * c12s.size() + j];
      row.d = ds[i];
      row.c12 = c12s[j];
      row.lower_value = low.value;
      row.upper_value = up.value;
      row.alpha_star = low.argmax[0];
      row.beta_star = low.argmax[1];
      row.noise_power = low.noise_power;
      row.conf_power = low.conf_power;
      row.wiretap_baseline = baseline;
    }
  });
  return rows;
}

std::vector<PowerSplitRow> power_split_report(const std::vector<SweepRow>& rows, double p2) {
  std::vector<PowerSplitRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    PowerSplitRow p;
    p.d = r.d;
    p.c12 = r.c12;
    p.noise_power = r.noise_power;
    p.conf_power = r.conf_power;
    p.near_destination = r.d > 0.9 + 1e-9 && r.d < 1.1 - 1e-9;
    p.conf_power_below_5pct = r.conf_power < 0.05 * p2;
    out.push_back(p);
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "d,c12,lower_bits,upper_bits,alpha_star,beta_star,noise_power_w,"
        "conf_power_w,wiretap_baseline_bits\n";
  for (const auto& r : rows) {
    os << format_sig9(r.d) << ',' << format_sig9(r.c12) << ','
       << format_sig9(r.lower_value) << ',' << format_sig9(r.upper_value) << ','
       << format_sig9(r.alpha_star) << ',' << format_sig9(r.beta_star) << ','
       << format_sig9(r.noise_power) << ',' << format_sig9(r.conf_power) << ','
       << format_sig9(r.wiretap_baseline) << '\n';
  }
  return os.str();
}

namespace {

constexpr double kW = 640.0, kH = 420.0, kMargin = 50.0;

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> pts;  // (d, value)
};

std::string render_svg(const std::vector<Series>& series, const std::string& y_label) {
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1e-12;
  bool first = true;
  for (const auto& s : series)
    for (auto [x, y] : s.pts) {
      if (first) {
        xmin = xmax = x;
        first = false;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymax = std::max(ymax, y);
    }
  if (xmax <= xmin) xmax = xmin + 1.0;

  auto px = [&](double x) {
    return kMargin + (x - xmin) / (xmax - xmin) * (kW - 2 * kMargin);
  };
  auto py = [&](double y) {
    return kH - kMargin - (y - ymin) / (ymax - ymin) * (kH - 2 * kMargin);
  };

  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                 "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
     << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\">\n";
  os << "<rect width=\"" << kW << "\" height=\"" << kH << "\" fill=\"white\"/>\n";
  os << "<line x1=\"" << kMargin << "\" y1=\"" << kH - kMargin << "\" x2=\"" << kW - kMargin
     << "\" y2=\"" << kH - kMargin << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
     << "\" y2=\"" << kH - kMargin << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 12
     << "\" text-anchor=\"middle\" font-size=\"12\">Location of Encoder 2</text>\n";
  os << "<text x=\"14\" y=\"" << kH / 2 << "\" text-anchor=\"middle\" font-size=\"12\" "
     << "transform=\"rotate(-90 14 " << kH / 2 << ")\">" << y_label << "</text>\n";

  size_t ci = 0;
  for (const auto& s : series) {
    const char* color = colors[ci % 8];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (auto [x, y] : s.pts) os << format_sig9(px(x)) << ',' << format_sig9(py(y)) << ' ';
    os << "\"/>\n";
    os << "<text x=\"" << kW - kMargin + 4 << "\" y=\"" << kMargin + 14.0 * ci
       << "\" font-size=\"10\" fill=\"" << color << "\">" << s.label << "</text>\n";
    ++ci;
  }
  os << "</svg>\n";
  return os.str();
}

std::string c12_label(double c12) {
  return is_infinite_c12(c12) ? std::string("inf") : format_sig9(c12);
}

}  // namespace

std::string sweep_bounds_svg(const std::vector<SweepRow>& rows) {
  // Group by c12 ascending; rows come sorted by (d, c12).
  std::map<double, Series> lower;
  Series upper{"upper", {}}, base{"wiretap", {}};
  for (const auto& r : rows) {
    auto& s = lower[r.c12];
    s.label = "lower C12=" + c12_label(r.c12);
    s.pts.emplace_back(r.d, r.lower_value);
    if (r.c12 == rows.front().c12) {
      upper.pts.emplace_back(r.d, r.upper_value);
      if (r.wiretap_baseline >= 0.0) base.pts.emplace_back(r.d, r.wiretap_baseline);
    }
  }
  std::vector<Series> series;
  series.push_back(upper);
  for (auto& [c, s] : lower) series.push_back(std::move(s));
  if (!base.pts.empty()) series.push_back(base);
  return render_svg(series, "Perfect Secrecy Rate (bits/channel use)");
}

std::string power_split_svg(const std::vector<SweepRow>& rows) {
  std::map<double, Series> noise, conf;
  for (const auto& r : rows) {
    auto& n = noise[r.c12];
    n.label = "noise power C12=" + c12_label(r.c12);
    n.pts.emplace_back(r.d, r.noise_power);
    auto& c = conf[r.c12];
    c.label = "conf power C12=" + c12_label(r.c12);
    c.pts.emplace_back(r.d, r.conf_power);
  }
  std::vector<Series> series;
  for (auto& [k, s] : noise) series.push_back(std::move(s));
  for (auto& [k, s] : conf) series.push_back(std::move(s));
  return render_svg(series, "Power (watt)");
}

}  // namespace secmac
