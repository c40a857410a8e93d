#include "ggs/treeauto.hpp"

#include <sstream>

#include "ggs/errors.hpp"

namespace ggs {

Vertex parse_vertex(unsigned p, const std::string& text) {
  Vertex v;
  for (char c : text) {
    if (c < '0' || c > '9' || static_cast<unsigned>(c - '0') >= p)
      throw usage_error("bad vertex digit '" + std::string(1, c) +
                        "' for p = " + std::to_string(p));
    v.digits.push_back(static_cast<unsigned>(c - '0'));
  }
  return v;
}

TreeWord::TreeWord(std::shared_ptr<const DefiningTuple> tuple,
                   std::vector<Letter> letters)
    : tuple_(std::move(tuple)), letters_(std::move(letters)) {}

TreeWord TreeWord::identity(std::shared_ptr<const DefiningTuple> tuple) {
  return TreeWord(std::move(tuple), {});
}

TreeWord TreeWord::generator_a(std::shared_ptr<const DefiningTuple> tuple) {
  return TreeWord(std::move(tuple), {Letter{'a', 1}});
}

TreeWord TreeWord::generator_b(std::shared_ptr<const DefiningTuple> tuple) {
  return TreeWord(std::move(tuple), {Letter{'b', 1}});
}

TreeWord TreeWord::commutator_c(std::shared_ptr<const DefiningTuple> tuple) {
  TreeWord a = generator_a(tuple), b = generator_b(tuple);
  return b.inverse() * a.inverse() * b * a;
}

void TreeWord::append_reduced(char gen, long long exp) {
  const unsigned p = tuple_->p();
  long long e = exp % p;
  if (e < 0)
    e += p;
  if (e == 0)
    return;
  if (!letters_.empty() && letters_.back().gen == gen) {
    unsigned merged = (letters_.back().exp + static_cast<unsigned>(e)) % p;
    letters_.pop_back();
    if (merged != 0)
      append_reduced(gen, merged); // re-merge in case of cascade
    return;
  }
  letters_.push_back(Letter{gen, static_cast<unsigned>(e)});
}

TreeWord TreeWord::operator*(const TreeWord& other) const {
  if (tuple() != other.tuple())
    throw usage_error("words belong to different groups");
  TreeWord r(tuple_, letters_);
  for (const Letter& l : other.letters_)
    r.append_reduced(l.gen, l.exp);
  return r;
}

TreeWord TreeWord::inverse() const {
  TreeWord r(tuple_, {});
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.letters_.push_back(Letter{it->gen, p() - it->exp});
  return r;
}

TreeWord TreeWord::pow(long long k) const {
  TreeWord base = k < 0 ? inverse() : *this;
  long long reps = k < 0 ? -k : k;
  TreeWord r = identity(tuple_);
  for (long long i = 0; i < reps; ++i)
    r = r * base;
  return r;
}

TreeWord TreeWord::conjugate(const TreeWord& by) const {
  return by.inverse() * (*this) * by;
}

TreeWord TreeWord::parse(std::shared_ptr<const DefiningTuple> tuple,
                         const std::string& text) {
  TreeWord r = identity(tuple);
  std::istringstream in(text);
  std::string token;
  std::size_t pos = 0;
  while (in >> token) {
    pos = text.find(token, pos);
    if (token[0] != 'a' && token[0] != 'b')
      throw usage_error("bad generator at position " + std::to_string(pos) +
                        ": '" + token + "'");
    long long exp = 1;
    if (token.size() > 1) {
      if (token[1] != '^' || token.size() == 2)
        throw usage_error("bad exponent at position " + std::to_string(pos) +
                          ": '" + token + "'");
      try {
        std::size_t used = 0;
        exp = std::stoll(token.substr(2), &used);
        if (used != token.size() - 2)
          throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw usage_error("bad exponent at position " + std::to_string(pos) +
                          ": '" + token + "'");
      }
    }
    r.append_reduced(token[0], exp);
    pos += token.size();
  }
  return r;
}

std::string TreeWord::str() const {
  if (letters_.empty())
    return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0)
      out << ' ';
    out << letters_[i].gen;
    if (letters_[i].exp != 1)
      out << '^' << letters_[i].exp;
  }
  return out.str();
}

unsigned root_action(const TreeWord& w) {
  unsigned sum = 0;
  for (const auto& l : w.letters())
    if (l.gen == 'a')
      sum = (sum + l.exp) % w.p();
  return sum;
}

TreeWord section(const TreeWord& w, unsigned x) {
  const unsigned p = w.p();
  const DefiningTuple& e = w.tuple();
  if (x >= p)
    throw usage_error("section vertex out of range");
  TreeWord out = TreeWord::identity(w.tuple_ptr());
  unsigned v = x; // position inspected while letters act
  for (const auto& l : w.letters()) {
    if (l.gen == 'a') {
      v = (v + l.exp) % p;
    } else if (v == 0) {
      out.append_reduced('b', l.exp);
    } else {
      out.append_reduced('a', static_cast<long long>(l.exp) * e.at(v));
    }
  }
  return out;
}

TreeWord section(const TreeWord& w, const Vertex& v) {
  TreeWord cur = w;
  for (unsigned digit : v.digits)
    cur = section(cur, digit);
  return cur;
}

std::vector<TreeWord> first_level_sections(const TreeWord& w) {
  unsigned r = root_action(w);
  if (r != 0)
    throw usage_error("word does not stabilize the first level: root action " +
                      std::to_string(r));
  std::vector<TreeWord> out;
  out.reserve(w.p());
  for (unsigned x = 0; x < w.p(); ++x)
    out.push_back(section(w, x));
  return out;
}

TreeWord conjugate_by_a_power(const TreeWord& w, long long i) {
  return w.conjugate(TreeWord::generator_a(w.tuple_ptr()).pow(i));
}

TreeWord commutator_c_conjugate(std::shared_ptr<const DefiningTuple> tuple,
                                unsigned i) {
  return conjugate_by_a_power(TreeWord::commutator_c(tuple), i);
}

unsigned b_exponent(const TreeWord& w) {
  unsigned sum = 0;
  for (const auto& l : w.letters())
    if (l.gen == 'b')
      sum = (sum + l.exp) % w.p();
  return sum;
}

namespace {

std::optional<NucleusElement> as_nucleus(const TreeWord& w) {
  if (w.trivial_word())
    return NucleusElement{NucleusElement::Kind::power_of_a, 0};
  if (w.syllables() != 1)
    return std::nullopt;
  const auto& l = w.letters()[0];
  return NucleusElement{l.gen == 'a' ? NucleusElement::Kind::power_of_a
                                     : NucleusElement::Kind::power_of_b,
                        l.exp};
}

} // namespace

ContractionResult contract(const TreeWord& w, unsigned depth_budget) {
  if (depth_budget == 0)
    depth_budget = 2 + static_cast<unsigned>(w.syllables());
  if (auto n = as_nucleus(w))
    return ContractionResult{true, 0, n};
  std::vector<TreeWord> frontier{w};
  for (unsigned level = 1; level <= depth_budget; ++level) {
    std::vector<TreeWord> next;
    bool all_nucleus = true;
    for (const auto& word : frontier) {
      for (unsigned x = 0; x < w.p(); ++x) {
        TreeWord s = section(word, x);
        if (!as_nucleus(s))
          all_nucleus = false;
        next.push_back(std::move(s));
      }
    }
    if (all_nucleus)
      return ContractionResult{true, level, std::nullopt};
    frontier = std::move(next);
  }
  return ContractionResult{false, depth_budget, std::nullopt};
}

bool is_identity(const TreeWord& w) {
  if (root_action(w) != 0)
    return false;
  if (w.trivial_word())
    return true;
  // A single-letter stabilizing word is a nonzero power of b, never trivial.
  if (w.syllables() == 1)
    return false;
  for (unsigned x = 0; x < w.p(); ++x)
    if (!is_identity(section(w, x)))
      return false;
  return true;
}

bool equal(const TreeWord& w1, const TreeWord& w2) {
  if (w1.tuple() != w2.tuple())
    throw usage_error("words belong to different groups");
  return is_identity(w1 * w2.inverse());
}

namespace {

void fill_level_images(const TreeWord& w, unsigned n, unsigned offset_src,
                       unsigned offset_dst, std::vector<unsigned>& images) {
  const unsigned p = w.p();
  unsigned r = root_action(w);
  unsigned block = 1;
  for (unsigned i = 1; i < n; ++i)
    block *= p;
  if (n == 1) {
    for (unsigned x = 0; x < p; ++x)
      images[offset_src + x] = offset_dst + (x + r) % p;
    return;
  }
  for (unsigned x = 0; x < p; ++x)
    fill_level_images(section(w, x), n - 1, offset_src + x * block,
                      offset_dst + ((x + r) % p) * block, images);
}

} // namespace

Permutation level_permutation(const TreeWord& w, unsigned n) {
  if (n < 1)
    throw usage_error("level must be at least 1");
  unsigned degree = 1;
  for (unsigned i = 0; i < n; ++i)
    degree *= w.p();
  std::vector<unsigned> images(degree);
  fill_level_images(w, n, 0, 0, images);
  return Permutation(std::move(images));
}

} // namespace ggs
