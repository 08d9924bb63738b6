#include "bubblepat/classification.hpp"

#include "bubblepat/operators.hpp"

namespace bubblepat {

std::string case_name(Case c) {
  switch (c) {
    case Case::EmptyClass: return "EmptyClass";
    case Case::SingletonClass: return "SingletonClass";
    case Case::OneLr: return "OneLr";
    case Case::TwoLrEndsMax: return "TwoLrEndsMax";
    case Case::TwoLrGeneral: return "TwoLrGeneral";
    case Case::ThreeLrReducible: return "ThreeLrReducible";
    case Case::ThreeLrSpecial: return "ThreeLrSpecial";
    case Case::NotAClass: return "NotAClass";
  }
  return "?";
}

Classification classify(const Permutation& p) {
  if (p.empty()) throw EmptyPermutation();
  const int n = p.size();
  const LrDecomposition lr = lr_decompose(p);
  const int k = lr.count();

  Classification c;
  c.lr_positions = lr.positions;

  if (n == 1) {
    c.kind = Case::EmptyClass;
    return c;
  }
  if (n == 2 && p[0] == 1) {
    c.kind = Case::SingletonClass;
    return c;
  }

  if (k == 1) {
    c.kind = Case::OneLr;
    ThreePartDecomposition d;
    d.a = lr.maxima[0];
    d.alpha = lr.gaps[0];
    c.decomposition = std::move(d);
    return c;
  }

  if (k == 2) {
    ThreePartDecomposition d;
    d.a = lr.maxima[0];
    d.alpha = lr.gaps[0];
    d.b = lr.maxima[1];
    d.beta = lr.gaps[1];
    c.decomposition = std::move(d);
    if (p.ends_with_max()) {
      c.kind = Case::TwoLrEndsMax;
      Word head(p.values().begin(), p.values().end() - 1);
      c.reduced = Permutation(std::move(head));
    } else {
      c.kind = Case::TwoLrGeneral;
    }
    return c;
  }

  if (k == 3 && lr.positions[2] == n) {
    // Third maximum is the final entry; still a class.
    ThreePartDecomposition d;
    d.a = lr.maxima[0];
    d.alpha = lr.gaps[0];
    d.b = lr.maxima[1];
    d.beta = lr.gaps[1];
    d.c = lr.maxima[2];
    c.decomposition = std::move(d);
    if (lr.gaps[1].empty()) {
      c.kind = Case::ThreeLrSpecial;
    } else {
      c.kind = Case::ThreeLrReducible;
      Word head(p.values().begin(), p.values().end() - 1);
      c.reduced = Permutation(std::move(head));
    }
    return c;
  }

  // Three or more maxima with the third not final. Describe the normal form
  // that ends with a trailing maximum; appending one does not change the
  // inverse image.
  c.kind = Case::NotAClass;
  ThreePartDecomposition d;
  d.a = lr.maxima[0];
  d.alpha = lr.gaps[0];
  d.b = lr.maxima[1];
  d.beta = lr.gaps[1];
  d.c = lr.maxima[2];
  const bool ends_max = p.ends_with_max();
  const int stop = ends_max ? n - 1 : n;
  for (int i = lr.positions[2]; i < stop; ++i) d.gamma.push_back(p[i]);
  d.trailing_max = ends_max ? n : n + 1;
  c.decomposition = std::move(d);
  return c;
}

Permutation append_max(const Permutation& p) {
  if (p.ends_with_max()) throw EndsWithMax();
  Word values = p.values();
  values.push_back(p.size() + 1);
  return Permutation(std::move(values));
}

std::pair<Permutation, Permutation> witness_pair(const Permutation& p) {
  const Classification cls = classify(p);
  if (cls.good()) throw IsGoodPermutation(p.display());

  const ThreePartDecomposition& d = *cls.decomposition;
  const int top = *d.trailing_max;

  Word w1;
  w1.reserve(static_cast<std::size_t>(top));
  w1.push_back(*d.b);
  w1.push_back(d.a);
  w1.insert(w1.end(), d.alpha.begin(), d.alpha.end());
  w1.push_back(top);
  w1.insert(w1.end(), d.beta.begin(), d.beta.end());
  w1.push_back(*d.c);
  w1.insert(w1.end(), d.gamma.begin(), d.gamma.end());
  Permutation theta1(std::move(w1));

  Word w2;
  w2.reserve(static_cast<std::size_t>(top) + 1);
  w2.push_back(top + 1);
  w2.insert(w2.end(), theta1.values().begin(), theta1.values().end());
  Permutation theta2(std::move(w2));

  // The pair is only useful if it really separates the two memberships;
  // check rather than trust the construction.
  if (!contains(theta2, theta1) || !contains(bubble_splice(theta1), p) ||
      contains(bubble_splice(theta2), p)) {
    throw Error("witness verification failed for " + p.str());
  }
  return {std::move(theta1), std::move(theta2)};
}

void to_json(nlohmann::json& j, const ThreePartDecomposition& d) {
  j = nlohmann::json::object();
  j["a"] = d.a;
  j["alpha"] = word_str(d.alpha);
  if (d.b) j["b"] = *d.b;
  j["beta"] = word_str(d.beta);
  if (d.c) j["c"] = *d.c;
  j["gamma"] = word_str(d.gamma);
  if (d.trailing_max) j["trailing_max"] = *d.trailing_max;
}

void to_json(nlohmann::json& j, const Classification& c) {
  j = nlohmann::json::object();
  j["case"] = case_name(c.kind);
  j["good"] = c.good();
  j["lr_maxima_positions"] = c.lr_positions;
  if (c.decomposition) {
    j["decomposition"] = *c.decomposition;
  } else {
    j["decomposition"] = nullptr;
  }
  if (c.reduced) {
    j["reduced"] = c.reduced->str();
  } else {
    j["reduced"] = nullptr;
  }
}

}  // namespace bubblepat
