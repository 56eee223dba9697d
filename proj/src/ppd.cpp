// Copyright 2026 paralog contributors
#include "paralog/ppd.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "paralog/error.hpp"

namespace paralog::ppd {

namespace {

constexpr double kSumTolerance = 1e-9;

void check_component(const std::vector<double>& p, std::size_t n,
                     const char* which) {
  if (p.size() != n)
    throw ValidationError(std::string(which) +
                          " component size does not match outcomes");
  double sum = 0.0;
  for (double x : p) {
    if (x < 0)
      throw ValidationError(std::string(which) + " component has a negative entry");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kSumTolerance)
    throw ValidationError(std::string(which) + " component does not sum to 1");
}

double shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0) h -= x * std::log2(x);
  return h;
}

// KL(a || b) in bits over one component, with optional denominator smoothing.
double kl(const std::vector<double>& a, const std::vector<double>& b,
          const std::vector<std::string>& outcomes, double eps) {
  std::vector<double> q = b;
  if (eps > 0) {
    double sum = 0.0;
    for (double& x : q) {
      x += eps;
      sum += x;
    }
    for (double& x : q) x /= sum;
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) continue;
    if (q[i] <= 0)
      throw ValidationError("support mismatch at outcome '" + outcomes[i] +
                            "': left side has mass where the right has none");
    d += a[i] * std::log2(a[i] / q[i]);
  }
  return d;
}

}  // namespace

void validate(const Ppd& d) {
  if (d.outcomes.empty()) throw ValidationError("distribution has no outcomes");
  check_component(d.pos, d.outcomes.size(), "positive");
  check_component(d.neg, d.outcomes.size(), "negative");
}

std::pair<double, double> entropy_components(const Ppd& d) {
  validate(d);
  return {shannon(d.pos), shannon(d.neg)};
}

double entropy(const Ppd& d) {
  auto [hp, hn] = entropy_components(d);
  return hp + hn;
}

double relative_entropy(const Ppd& a, const Ppd& b, double eps) {
  validate(a);
  validate(b);
  if (eps < 0) throw ValidationError("negative smoothing epsilon");
  if (a.outcomes != b.outcomes)
    throw ValidationError("distributions have different outcome sequences");
  return kl(a.pos, b.pos, a.outcomes, eps) + kl(a.neg, b.neg, a.outcomes, eps);
}

double intension_degree(const InstanceEvidence& x, const InstanceEvidence& context,
                        double eps) {
  auto shape_check = [](const InstanceEvidence& e, const char* who) {
    if (e.instances.empty())
      throw ValidationError(std::string(who) + " has no instances");
    if (e.w_pos.size() != e.instances.size() ||
        e.w_neg.size() != e.instances.size())
      throw ValidationError(std::string(who) +
                            " weight vectors do not match its instances");
    for (std::size_t i = 0; i < e.instances.size(); ++i)
      if (e.w_pos[i] < 0 || e.w_neg[i] < 0)
        throw ValidationError(std::string(who) + " has a negative weight");
  };
  shape_check(x, "the narrower side");
  shape_check(context, "the context");

  std::unordered_map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < context.instances.size(); ++i)
    if (!at.emplace(context.instances[i], i).second)
      throw ValidationError("duplicate context instance '" +
                            context.instances[i] + "'");

  // Spread each side over the context's instance sequence, then normalize
  // each component on its own.
  Ppd xd, cd;
  xd.outcomes = cd.outcomes = context.instances;
  xd.pos.assign(context.instances.size(), 0.0);
  xd.neg.assign(context.instances.size(), 0.0);
  for (std::size_t i = 0; i < x.instances.size(); ++i) {
    auto it = at.find(x.instances[i]);
    if (it == at.end())
      throw ValidationError("instance '" + x.instances[i] +
                            "' is not part of the context");
    xd.pos[it->second] += x.w_pos[i];
    xd.neg[it->second] += x.w_neg[i];
  }
  cd.pos = context.w_pos;
  cd.neg = context.w_neg;

  auto normalize = [](std::vector<double>& p, const char* who, const char* which) {
    double sum = 0.0;
    for (double v : p) sum += v;
    if (sum <= 0)
      throw ValidationError(std::string(who) + " has no " + which +
                            " weight to normalize");
    for (double& v : p) v /= sum;
  };
  normalize(xd.pos, "the narrower side", "positive");
  normalize(xd.neg, "the narrower side", "negative");
  normalize(cd.pos, "the context", "positive");
  normalize(cd.neg, "the context", "negative");

  return relative_entropy(xd, cd, eps);
}

}  // namespace paralog::ppd
