#include "qint/simple_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <variant>

namespace qint {

namespace {

bool sets_disjoint(const MeasurableSet& a, const MeasurableSet& b) {
  if (std::holds_alternative<IntervalSet>(a)) {
    return std::get<IntervalSet>(a).disjoint_from(std::get<IntervalSet>(b));
  }
  return std::get<FiniteSubset>(a).disjoint_from(std::get<FiniteSubset>(b));
}

MeasurableSet sets_unite(const MeasurableSet& a, const MeasurableSet& b) {
  if (std::holds_alternative<IntervalSet>(a)) {
    return std::get<IntervalSet>(a).unite(std::get<IntervalSet>(b));
  }
  return std::get<FiniteSubset>(a).unite(std::get<FiniteSubset>(b));
}

bool covers_space(const MeasurableSet& u) {
  if (std::holds_alternative<IntervalSet>(u)) {
    return std::abs(std::get<IntervalSet>(u).total_length() - 1.0) < 1e-12;
  }
  const auto& s = std::get<FiniteSubset>(u);
  return s.cardinality() == s.space_size();
}

}  // namespace

SimpleFunction::SimpleFunction(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("SimpleFunction: no pieces");
  finite_ = std::holds_alternative<FiniteSubset>(pieces_.front().second);
  for (const Piece& p : pieces_) {
    if (std::holds_alternative<FiniteSubset>(p.second) != finite_) {
      throw std::invalid_argument("SimpleFunction: pieces live in different domains");
    }
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces_.size(); ++j) {
      if (!sets_disjoint(pieces_[i].second, pieces_[j].second)) {
        throw std::invalid_argument("SimpleFunction: supports " + std::to_string(i) + " and " +
                                    std::to_string(j) + " overlap");
      }
    }
  }
  MeasurableSet u = pieces_.front().second;
  for (std::size_t i = 1; i < pieces_.size(); ++i) u = sets_unite(u, pieces_[i].second);
  if (!covers_space(u)) {
    throw std::invalid_argument("SimpleFunction: supports do not cover the whole space");
  }
}

std::vector<SimpleFunction::Piece> SimpleFunction::sorted_merged() const {
  std::vector<Piece> sorted = pieces_;
  std::sort(sorted.begin(), sorted.end(),
            [](const Piece& a, const Piece& b) { return a.first < b.first; });
  std::vector<Piece> merged;
  for (Piece& p : sorted) {
    if (!merged.empty() && merged.back().first == p.first) {
      merged.back().second = sets_unite(merged.back().second, p.second);
    } else {
      merged.push_back(std::move(p));
    }
  }
  return merged;
}

double integrate_simple(const SimpleFunction& f, const QMeasure& mu, double center) {
  const std::vector<SimpleFunction::Piece> pieces = f.sorted_merged();
  const std::size_t n = pieces.size();

  // m = number of values <= center.
  std::size_t m = 0;
  while (m < n && pieces[m].first <= center) ++m;

  double above = 0.0;
  if (m < n) {
    // Tail unions T_k = union of supports with value >= value_k, built from
    // the top down.
    std::vector<double> tail_measure(n);
    MeasurableSet tail = pieces[n - 1].second;
    tail_measure[n - 1] = mu(tail);
    for (std::size_t k = n - 1; k-- > m;) {
      tail = sets_unite(tail, pieces[k].second);
      tail_measure[k] = mu(tail);
    }
    above = (pieces[m].first - center) * tail_measure[m];
    for (std::size_t k = m; k + 1 < n; ++k) {
      above += (pieces[k + 1].first - pieces[k].first) * tail_measure[k + 1];
    }
  }

  double below = 0.0;
  if (m > 0) {
    // Head unions H_k = union of supports with value <= value_k.
    MeasurableSet head = pieces[0].second;
    for (std::size_t k = 0; k + 1 < m; ++k) {
      double width = pieces[k + 1].first - pieces[k].first;
      below += width * mu(head);
      head = sets_unite(head, pieces[k + 1].second);
    }
    below += (center - pieces[m - 1].first) * mu(head);
  }

  return above - below;
}

}  // namespace qint
