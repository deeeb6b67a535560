#include "finact/gl2.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

#include "finact/error.hpp"
#include "json.hpp"

namespace finact {

std::int64_t Mat2::max_abs_entry() const {
  return std::max({std::llabs(a), std::llabs(b), std::llabs(c), std::llabs(d)});
}

std::string Mat2::to_string() const {
  std::ostringstream out;
  out << "[[" << a << ',' << b << "],[" << c << ',' << d << "]]";
  return out.str();
}

int torsion_order(const Mat2& m) {
  Mat2 power = m;
  for (int k = 1; k <= 6; ++k) {
    if (power == Mat2::identity()) return k;
    power = power * m;
  }
  return 0;
}

std::vector<Mat2> torsion_elements(int entry_bound) {
  std::vector<Mat2> result;
  const std::int64_t b = entry_bound;
  for (std::int64_t a = -b; a <= b; ++a) {
    for (std::int64_t x = -b; x <= b; ++x) {
      for (std::int64_t c = -b; c <= b; ++c) {
        for (std::int64_t d = -b; d <= b; ++d) {
          const Mat2 m{a, x, c, d};
          if (std::llabs(m.det()) == 1 && torsion_order(m) != 0) result.push_back(m);
        }
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<std::vector<Mat2>> finite_closure(const std::vector<Mat2>& generators, std::size_t cap) {
  std::set<Mat2> seen{Mat2::identity()};
  std::deque<Mat2> frontier{Mat2::identity()};
  while (!frontier.empty()) {
    const Mat2 x = frontier.front();
    frontier.pop_front();
    for (const Mat2& g : generators) {
      const Mat2 y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap) return std::nullopt;
        frontier.push_back(y);
      }
    }
  }
  std::vector<Mat2> elements{Mat2::identity()};
  for (const Mat2& m : seen) {
    if (!(m == Mat2::identity())) elements.push_back(m);
  }
  return elements;
}

bool Gl2Report::matches_known_classification() const {
  if (max_order != 12) return false;
  return std::all_of(maximal_types.begin(), maximal_types.end(),
                     [](const std::string& t) { return t == "D6" || t == "D4"; });
}

std::string Gl2Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["entry_bound"] = entry_bound;
  doc["finite_subgroup_orders"] = finite_subgroup_orders;
  doc["maximal_types"] = maximal_types;
  doc["infinite_pairs"] = infinite_pairs;
  return doc.dump();
}

Gl2Report gl2_torsion_search(int entry_bound, std::size_t closure_cap) {
  if (entry_bound < 1) throw PreconditionError("gl2_torsion_search: entry bound must be >= 1");
  if (closure_cap < 24) throw PreconditionError("gl2_torsion_search: closure cap must be >= 24");

  const std::vector<Mat2> torsion = torsion_elements(entry_bound);
  Gl2Report report;
  report.entry_bound = entry_bound;
  report.closure_cap = closure_cap;
  report.torsion_count = torsion.size();

  // Subgroups keyed by their sorted element list.
  std::set<std::vector<Mat2>> found;
  std::deque<std::vector<Mat2>> pending;
  auto record = [&](std::vector<Mat2> elements) {
    std::sort(elements.begin(), elements.end());
    if (found.insert(elements).second) pending.push_back(std::move(elements));
  };

  for (std::size_t i = 0; i < torsion.size(); ++i) {
    for (std::size_t j = i; j < torsion.size(); ++j) {
      auto group = finite_closure({torsion[i], torsion[j]}, closure_cap);
      if (group) {
        record(std::move(*group));
      } else {
        ++report.infinite_pairs;
      }
    }
  }
  while (!pending.empty()) {
    const std::vector<Mat2> group = std::move(pending.front());
    pending.pop_front();
    for (const Mat2& t : torsion) {
      if (std::binary_search(group.begin(), group.end(), t)) continue;
      std::vector<Mat2> generators = group;
      generators.push_back(t);
      if (auto bigger = finite_closure(generators, closure_cap)) record(std::move(*bigger));
    }
  }

  std::vector<std::vector<Mat2>> groups(found.begin(), found.end());
  std::stable_sort(groups.begin(), groups.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::set<int> orders;
  std::vector<std::pair<int, std::string>> maximal;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    bool is_maximal = true;
    for (std::size_t j = i + 1; j < groups.size() && is_maximal; ++j) {
      if (groups[j].size() > groups[i].size() &&
          std::includes(groups[j].begin(), groups[j].end(), groups[i].begin(), groups[i].end())) {
        is_maximal = false;
      }
    }
    // Tables need the identity at index 0.
    std::vector<Mat2> ordered{Mat2::identity()};
    for (const Mat2& m : groups[i]) {
      if (!(m == Mat2::identity())) ordered.push_back(m);
    }
    Gl2Subgroup sub{groups[i], classify_so3(FiniteGroup::from_elements(ordered, std::multiplies<>{})),
                    is_maximal};
    const int order = static_cast<int>(groups[i].size());
    orders.insert(order);
    report.max_order = std::max(report.max_order, order);
    if (is_maximal) maximal.emplace_back(order, sub.type.short_name());
    report.subgroups.push_back(std::move(sub));
  }
  std::sort(maximal.begin(), maximal.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });
  for (const auto& [order, name] : maximal) {
    if (std::find(report.maximal_types.begin(), report.maximal_types.end(), name) ==
        report.maximal_types.end()) {
      report.maximal_types.push_back(name);
    }
  }
  report.finite_subgroup_orders.assign(orders.begin(), orders.end());
  return report;
}

}  // namespace finact
