/**
 * Copyright 2026 The vidaug Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
// Acceptance suite: one PASS/FAIL line per criterion. Exit status is non-zero
// when any gating criterion fails. Criterion 10 is reported only.

#include "vidaug/clip_io.hpp"
#include "vidaug/commands.hpp"
#include "vidaug/mix_ops.hpp"
#include "vidaug/pixel_ops.hpp"
#include "vidaug/policy.hpp"
#include "vidaug/schedules.hpp"
#include "vidaug/single_video_ops.hpp"

#include "curve_oracle.hpp"
#include "reference_ops.hpp"
#include "test_support.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace vidaug {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<double> values_of(const MagnitudeCurve& c) {
  return std::vector<double>(c.values().data(), c.values().data() + c.size());
}

// 1. Closed-form schedule values.
Outcome schedule_oracle_suite() {
  Outcome out;
  const auto start = Clock::now();
  const double ends[][2] = {{0.0, 1.0}, {1.0, 0.0}, {0.25, 0.75}, {0.6, 0.6}, {0.0, 0.0}, {0.9, 0.1}};
  for (int n = 2; n <= 64; ++n) {
    for (const auto& e : ends) {
      const auto curve = linear_schedule(e[0], e[1], n);
      for (int t = 0; t < n; ++t) {
        const double expect = e[0] + (e[1] - e[0]) * t / (n - 1.0);
        if (std::abs(curve[t] - expect) > 1e-9) out.fail("linear_schedule n=" + std::to_string(n));
      }
    }
    double peak = 0.0;
    for (int t = 0; t < n; ++t) {
      const double lam = fade_lambda(t, n);
      const double expect = std::min(t, n - t) / static_cast<double>(n);
      if (std::abs(lam - expect) > 1e-9) out.fail("fade_lambda closed form n=" + std::to_string(n));
      if (std::abs(lam - fade_lambda(n - 1 - t, n)) > 1.0 / n + 1e-12) {
        out.fail("fade_lambda mirror n=" + std::to_string(n));
      }
      peak = std::max(peak, lam);
    }
    // Peak at floor(n/2): exactly 0.5 for even n, (n-1)/(2n) for odd n.
    const double peak_expect = n % 2 == 0 ? 0.5 : (n - 1) / (2.0 * n);
    if (std::abs(peak - peak_expect) > 1e-12 || std::abs(fade_lambda(n / 2, n) - peak) > 1e-12 ||
        peak > 0.5) {
      out.fail("fade_lambda peak n=" + std::to_string(n));
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 1.0) out.fail("runtime " + std::to_string(secs) + " s");
  if (out.pass) out.detail = "n=2..64, runtime " + std::to_string(secs) + " s";
  return out;
}

// 2. MagAugment structure over 10 000 curves.
Outcome magaugment_structural_suite() {
  Outcome out;
  const auto start = Clock::now();
  MagAugmentConfig cfg;
  cfg.beta = 8;
  cfg.perturbations = 2;
  const int n = 32;
  const RngStream root(20240601);
  int max_knots = 0;
  for (int i = 0; i < 10000; ++i) {
    RngStream base_stream = root.derive(i).derive(0);
    const double m = uniform(base_stream, 0.0, 1.0);
    const auto [m0, m1] = t_plus_endpoints(m, base_stream);
    const auto base = linear_schedule(m0, m1, n);
    const auto curve = magaugment_schedule(base, cfg, root.derive(i).derive(1)).curve;
    const auto again = magaugment_schedule(base, cfg, root.derive(i).derive(1)).curve;
    const auto v = values_of(curve);
    const auto w = values_of(again);
    if (std::memcmp(v.data(), w.data(), v.size() * sizeof(double)) != 0) out.fail("not bit-reproducible");
    if (v.front() != base[0] || v.back() != base[n - 1]) out.fail("endpoint moved");
    for (double x : v)
      if (!(x >= 0.0 && x <= 1.0)) out.fail("value outside [0,1]");
    const auto knots = oracle::extract_knots(v);
    max_knots = std::max<int>(max_knots, static_cast<int>(knots.size()));
    if (knots.size() > 8) out.fail("more than 8 knots");
    if (oracle::reconstruction_error(v, knots) > 1e-9) out.fail("not piecewise linear");
  }
  const double secs = seconds_since(start);
  if (secs >= 10.0) out.fail("runtime " + std::to_string(secs) + " s");
  if (out.pass) {
    out.detail = "max knots " + std::to_string(max_knots) + ", runtime " + std::to_string(secs) + " s";
  }
  return out;
}

// 3. Op selection is uniform over the active set.
Outcome policy_uniformity() {
  Outcome out;
  std::ostringstream detail;
  const int draws = 100000;
  for (Variant v : {Variant::RA, Variant::RA_T_plus, Variant::RA_Tpp, Variant::RA_Tpp_Mag}) {
    PolicySpec spec;
    spec.variant = v;
    spec.num_ops = 1;
    const auto active = spec.active_ops();
    std::map<OpKind, long> counts;
    const RngStream root(7 + static_cast<int>(v));
    for (int i = 0; i < draws; ++i) ++counts[sample_policy(spec, 8, root.derive(i))[0].op];
    if (counts.size() != active.size()) out.fail(std::string(variant_name(v)) + " op set size");
    const double expected = static_cast<double>(draws) / active.size();
    double chi2 = 0.0;
    for (OpKind op : active) {
      const double d = counts[op] - expected;
      chi2 += d * d / expected;
    }
    const boost::math::chi_squared dist(static_cast<double>(active.size() - 1));
    const double p = boost::math::cdf(boost::math::complement(dist, chi2));
    if (!(p > 0.01)) out.fail(std::string(variant_name(v)) + " p=" + std::to_string(p));
    detail << variant_name(v) << " K=" << active.size() << " p=" << p << "; ";
  }
  if (out.pass) out.detail = detail.str();
  return out;
}

// 4. Masks and soft labels, checked against watermarks and recomputed geometry.
struct MixCheck {
  Outcome* out;
  const Clip& a;
  const Clip& b;

  void run(MixKind kind, const MixResult& r) {
    const auto& p = r.params;
    const int n = a.frames();
    const int h = a.height();
    const int w = a.width();
    const int ch = a.channels();
    const std::string name(mix_name(kind));
    const MixFill fill = fill_of(kind);
    const std::size_t row_bytes = static_cast<std::size_t>(w) * ch;

    if (p.t_begin < 0 || p.t_end >= n || p.t_begin > p.t_end) return out->fail(name + ": bad extent");
    std::int64_t mask_pixels = 0;
    double blended = 0.0;
    for (int t = 0; t < n; ++t) {
      const bool active = t >= p.t_begin && t <= p.t_end;
      int x0 = 0, y0 = 0, bw = w, bh = h;
      if (p.box) {
        const double span = p.t_end - p.t_begin;
        const int tc = std::clamp(t, p.t_begin, p.t_end);
        const double f = span > 0 ? (tc - p.t_begin) / span : 0.0;
        for (int k = 0; k < 2; ++k) {
          const double s = p.box->centers(p.t_begin, k);
          const double e = p.box->centers(p.t_end, k);
          if (std::abs(p.box->centers(t, k) - (s + (e - s) * f)) > 1e-9) {
            return out->fail(name + ": trajectory not linear");
          }
        }
        bw = p.box->box_w;
        bh = p.box->box_h;
        x0 = static_cast<int>(std::floor(p.box->centers(t, 0) - bw / 2.0 + 0.5));
        y0 = static_cast<int>(std::floor(p.box->centers(t, 1) - bh / 2.0 + 0.5));
        if (x0 < 0 || y0 < 0 || x0 + bw > w || y0 + bh > h) return out->fail(name + ": box leaves frame");
      }
      double lam = 0.0;
      if (fill == MixFill::Blend) {
        if (!p.lambda) return out->fail(name + ": missing lambda");
        if (active) {
          const int len = p.t_end - p.t_begin + 1;
          const double lo = p.lambda->lambda - p.lambda->epsilon;
          const double expect = len == 1 ? p.lambda->lambda
                                         : lo + 2.0 * p.lambda->epsilon * (t - p.t_begin) / (len - 1.0);
          lam = p.lambda->at(t);
          if (std::abs(lam - expect) > 1e-12 || lam < 0.0 || lam > 1.0) {
            return out->fail(name + ": lambda schedule");
          }
        }
      }
      if (active) {
        mask_pixels += static_cast<std::int64_t>(bw) * bh;
        blended += static_cast<double>(bw) * bh * lam;
      }
      for (int y = 0; y < h; ++y) {
        const Pixel* o = &r.clip.at(t, y, 0, 0);
        const Pixel* src = &a.at(t, y, 0, 0);
        if (!active || y < y0 || y >= y0 + bh) {
          if (std::memcmp(o, src, row_bytes) != 0) return out->fail(name + ": untouched row changed");
          continue;
        }
        const std::size_t lo = static_cast<std::size_t>(x0) * ch;
        const std::size_t hi = static_cast<std::size_t>(x0 + bw) * ch;
        if (std::memcmp(o, src, lo) != 0 || std::memcmp(o + hi, src + hi, row_bytes - hi) != 0) {
          return out->fail(name + ": untouched columns changed");
        }
        const Pixel* part = &b.at(t, y, 0, 0);
        bool same = true;
        switch (fill) {
          case MixFill::Constant:
            same = std::all_of(o + lo, o + hi, [](Pixel v) { return v == kCutOutFill; });
            break;
          case MixFill::Paste:
            same = std::memcmp(o + lo, part + lo, hi - lo) == 0;
            break;
          case MixFill::Blend: {
            // Both sources lie in [0, 255], so the blend needs no clamp.
            unsigned mismatch = 0;
            for (std::size_t i = lo; i < hi; ++i) {
              const double v = src[i] + lam * (static_cast<double>(part[i]) - src[i]);
              mismatch |= o[i] ^ static_cast<unsigned>(static_cast<int>(v + 0.5));
            }
            same = mismatch == 0;
            break;
          }
        }
        if (!same) return out->fail(name + ": footprint value");
      }
    }

    // Watermark counts: A lies in [1, 100], B in [150, 249], the fill is 128.
    const auto& data = r.clip.data();
    const std::int64_t total = static_cast<std::int64_t>(n) * h * w;
    if (mask_pixels != p.footprint_count()) return out->fail(name + ": footprint count");
    switch (fill) {
      case MixFill::Constant: {
        const auto filled = std::count(data.begin(), data.end(), kCutOutFill);
        if (filled != mask_pixels * ch) return out->fail(name + ": fill count");
        if (r.label.weight_b != 0.0 || r.label.label_b != r.label.label_a) {
          return out->fail(name + ": cut-out label");
        }
        break;
      }
      case MixFill::Paste: {
        const auto pasted = std::count_if(data.begin(), data.end(), [](Pixel v) { return v >= 150; });
        if (pasted % ch != 0) return out->fail(name + ": partial pixel paste");
        const double fraction = static_cast<double>(pasted / ch) / static_cast<double>(total);
        if (fraction != r.label.weight_b) return out->fail(name + ": weight_b != pasted fraction");
        break;
      }
      case MixFill::Blend: {
        const double fraction = static_cast<double>(mask_pixels) / static_cast<double>(total);
        if (fraction * p.lambda->mean_lambda != r.label.weight_b) {
          return out->fail(name + ": weight_b != count fraction x lambda");
        }
        if (std::abs(blended / static_cast<double>(total) - r.label.weight_b) > 1e-12) {
          return out->fail(name + ": weight_b != blended signal");
        }
        break;
      }
    }
    if (fill != MixFill::Constant && r.label.label_b != 1) return out->fail(name + ": partner label");
  }
};

Outcome mask_label_exactness() {
  Outcome out;
  const auto start = Clock::now();
  const Clip a = testing::watermarked_clip(32, 112, 112, 3, false);
  const Clip b = testing::watermarked_clip(32, 112, 112, 3, true);
  MixCheck check{&out, a, b};
  const RngStream root(4);
  for (int k = 0; k < kNumMixKinds && out.pass; ++k) {
    const auto kind = static_cast<MixKind>(k);
    for (int i = 0; i < 1000 && out.pass; ++i) {
      const auto r = apply_mix(kind, a, 0, Partner{b, 1}, kDefaultAlpha, root.derive(k).derive(i));
      check.run(kind, r);
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 120.0) out.fail("runtime " + std::to_string(secs) + " s");
  if (out.pass) out.detail = "16 kinds x 1000, runtime " + std::to_string(secs) + " s";
  return out;
}

// 5. Pinned Float kinds reproduce their static counterparts.
Outcome float_static_degeneracy() {
  Outcome out;
  const Clip a = testing::textured_clip(16, 64, 64, 3, 51);
  const Clip b = testing::textured_clip(16, 64, 64, 3, 52);
  int kinds = 0;
  for (int k = 0; k < kNumMixKinds; ++k) {
    const auto kind = static_cast<MixKind>(k);
    if (!is_float(kind)) continue;
    ++kinds;
    const auto base = static_counterpart(kind);
    for (int seed = 0; seed < 100; ++seed) {
      const RngStream stream = RngStream(500 + seed);
      MixParams pinned = with_static_endpoints(
          sample_mix_params(kind, a.frames(), a.height(), a.width(), kDefaultAlpha, stream));
      pinned.kind = base;
      const auto lhs = render_mix(pinned, a, 0, Partner{b, 1});
      const auto rhs = apply_mix(base, a, 0, Partner{b, 1}, kDefaultAlpha, stream);
      if (!(lhs.clip == rhs.clip) || lhs.label.weight_b != rhs.label.weight_b) {
        out.fail(std::string(mix_name(kind)) + " seed " + std::to_string(seed));
      }
    }
  }
  if (out.pass) out.detail = std::to_string(kinds) + " Float kinds x 100 seeds";
  return out;
}

// 6. Library kernels against the scalar reference.
Outcome per_frame_equivalence() {
  Outcome out;
  std::vector<Clip> corpus;
  for (int i = 0; i < 10; ++i) {
    const int ch = i % 4 == 3 ? 1 : 3;
    const int h = 16 + 4 * (i % 3);
    const int w = 20 + 6 * (i % 4);
    corpus.push_back(i % 2 ? testing::random_clip(8, h, w, ch, 600 + i)
                           : testing::textured_clip(8, h, w, ch, 600 + i));
  }
  std::vector<MagnitudeCurve> curves = {static_schedule(0.5, 8), linear_schedule(0.0, 1.0, 8),
                                        linear_schedule(1.0, 0.1, 8), static_schedule(1.0, 8)};
  curves.push_back(magaugment_schedule(linear_schedule(0.3, 0.7, 8), MagAugmentConfig{}, RngStream(61)).curve);
  int compared = 0;
  for (std::size_t ci = 0; ci < corpus.size(); ++ci) {
    for (std::size_t k = 0; k < curves.size(); ++k) {
      const auto ms = values_of(curves[k]);
      for (OpKind op : kRandAugmentOps) {
        const int sign = (ci + k) % 2 ? -1 : 1;
        if (!(apply_pixel_op(corpus[ci], op, curves[k], sign) ==
              reference::clip_op(corpus[ci], op, ms, sign))) {
          out.fail(std::string(op_name(op)) + " clip " + std::to_string(ci) + " curve " + std::to_string(k));
        }
        ++compared;
      }
    }
  }
  if (out.pass) out.detail = std::to_string(compared) + " (op, clip, curve) triples bit-exact";
  return out;
}

// 7. Involution and identity laws.
Outcome involution_identity_laws() {
  Outcome out;
  for (int i = 0; i < 10; ++i) {
    const Clip clip = testing::random_clip(3 + i, 12, 16, i % 2 ? 1 : 3, 700 + i);
    if (!(video_reverse(video_reverse(clip)) == clip)) out.fail("reverse twice");
    const Clip pal = testing::palindromic_clip(2 + i, 12, 16, 3, 710 + i);
    if (!(frame_fade_in(pal) == pal)) out.fail("FrameFadeIn palindrome n=" + std::to_string(2 + i));
    for (OpKind op : kRandAugmentOps) {
      if (!has_magnitude(op)) continue;
      for (int sign : {-1, 1}) {
        if (!(apply_pixel_op(clip, op, static_schedule(0.0, clip.frames()), sign) == clip)) {
          out.fail(std::string(op_name(op)) + " at m=0");
        }
      }
    }
  }
  return out;
}

std::map<std::string, std::string> tree_bytes(const std::filesystem::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    files[std::filesystem::relative(entry.path(), root).string()] = os.str();
  }
  return files;
}

// 8. Byte-identical output trees.
Outcome end_to_end_determinism(const testing::TempDir& dir) {
  Outcome out;
  SynthOptions synth;
  synth.out_dir = dir.path() / "data";
  synth.count = 50;
  synth.frames = 16;
  synth.height = 48;
  synth.width = 48;
  synth.seed = 8;
  cmd_synth(synth);
  AugmentOptions options;
  options.manifest = synth.out_dir / "manifest.jsonl";
  options.policy.variant = Variant::RA_Tpp_Mag;
  options.policy.mix = MixKind::FloatCubeCutMixUp;
  options.policy.seed = 2024;
  std::vector<std::map<std::string, std::string>> trees;
  for (int run = 0; run < 3; ++run) {
    options.out_dir = dir.path() / ("out" + std::to_string(run));
    options.jobs = run == 2 ? 8 : 1;
    if (cmd_augment(options).exit_code() != 0) out.fail("augment run failed");
    trees.push_back(tree_bytes(options.out_dir));
  }
  if (trees[0].size() != 51) out.fail("expected 50 clips plus manifest");
  if (trees[0] != trees[1]) out.fail("two runs differ");
  if (trees[0] != trees[2]) out.fail("jobs=1 and jobs=8 differ");
  if (out.pass) out.detail = "50 clips, runs x2 with jobs=1 and one with jobs=8";
  return out;
}

std::map<int, std::vector<double>> schedule_csv(const PolicySpec& spec, int n, int count) {
  std::ostringstream os;
  cmd_schedule(spec, n, count, os);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  std::map<int, std::vector<double>> curves;
  while (std::getline(in, line)) {
    int id = 0, t = 0;
    double m = 0.0;
    if (std::sscanf(line.c_str(), "%d,%d,%lf", &id, &t, &m) == 3) curves[id].push_back(m);
  }
  return curves;
}

// 9. Linear curves versus MagAugment curves, read back from the CSV export.
Outcome schedule_curve_structure() {
  Outcome out;
  const int n = 32;
  PolicySpec left;
  left.variant = Variant::RA_T_plus;
  left.magnitude = 0.5;
  PolicySpec right = left;
  right.variant = Variant::RA_Tpp_Mag;
  const int p = right.mag_config().perturbations;
  const auto lin = schedule_csv(left, n, 100);
  const auto mag = schedule_csv(right, n, 100);
  if (lin.size() != 100 || mag.size() != 100) return out.fail("expected 100 curves each"), out;
  int swung = 0;
  int max_regions = 0;
  for (const auto& [id, v] : lin) {
    if (v.size() != static_cast<std::size_t>(n)) out.fail("left curve length");
    if (oracle::extract_knots(v, 1e-6).size() != 2) out.fail("left curve not linear");
  }
  for (const auto& [id, v] : mag) {
    if (v.size() != static_cast<std::size_t>(n)) out.fail("right curve length");
    const int regions = oracle::swing_regions(v, 1e-6);
    max_regions = std::max(max_regions, regions);
    swung += regions > 0;
    if (regions > 2 * p) out.fail("right curve has " + std::to_string(regions) + " swing regions");
    if (oracle::extract_knots(v, 1e-6).size() > static_cast<std::size_t>(2 + 3 * p)) {
      out.fail("right curve knot count");
    }
  }
  if (swung == 0) out.fail("no swings in MagAugment curves");
  if (out.pass) {
    out.detail = "left 100/100 linear; right max swing regions " + std::to_string(max_regions) +
                 ", " + std::to_string(swung) + "/100 curves swung";
  }
  return out;
}

// 10. Throughput, reported only.
Outcome throughput(const testing::TempDir& dir, double* clips_per_second) {
  Outcome out;
  SynthOptions synth;
  synth.out_dir = dir.path() / "bench";
  synth.count = 64;
  synth.frames = 32;
  synth.height = 112;
  synth.width = 112;
  synth.seed = 10;
  cmd_synth(synth);
  AugmentOptions options;
  options.manifest = synth.out_dir / "manifest.jsonl";
  options.policy.num_ops = 1;
  options.policy.seed = 10;
  options.out_dir = dir.path() / "bench_out";
  options.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const auto start = Clock::now();
  if (cmd_augment(options).exit_code() != 0) out.fail("augment failed");
  *clips_per_second = synth.count / seconds_since(start);
  std::ostringstream os;
  os << *clips_per_second << " clips/s with " << options.jobs << " worker(s), 32x112x112x3, N=1";
  out.detail = os.str();
  return out;
}

}  // namespace
}  // namespace vidaug

int main() {
  using namespace vidaug;
  const testing::TempDir dir("acceptance");
  bool all_pass = true;
  auto report = [&](int id, const char* title, const std::function<Outcome()>& fn) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %2d %-36s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
    all_pass = all_pass && o.pass;
  };
  report(1, "schedule oracle suite", schedule_oracle_suite);
  report(2, "MagAugment structural suite", magaugment_structural_suite);
  report(3, "policy uniformity", policy_uniformity);
  report(4, "mask/label exactness", mask_label_exactness);
  report(5, "float-vs-static degeneracy", float_static_degeneracy);
  report(6, "per-frame equivalence", per_frame_equivalence);
  report(7, "involution/identity laws", involution_identity_laws);
  report(8, "end-to-end determinism", [&] { return end_to_end_determinism(dir); });
  report(9, "schedule curve structure", schedule_curve_structure);

  double rate = 0.0;
  Outcome bench;
  try {
    bench = throughput(dir, &rate);
  } catch (const std::exception& e) {
    bench.fail(std::string("exception: ") + e.what());
  }
  const bool fast = bench.pass && rate >= 50.0;
  std::printf("[%s] %2d %-36s %s (non-gating, target >= 50 clips/s on 8 cores)\n", fast ? "PASS" : "FAIL",
              10, "throughput sanity", bench.detail.c_str());
  return all_pass ? 0 : 1;
}
