#include <unordered_map>

#include "ordlat/error.hpp"
#include "ordlat/lgroup.hpp"

namespace ordlat {

std::size_t JoinMeetForm::entry_count() const noexcept {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.size();
  return n;
}

std::string JoinMeetForm::str() const {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i != 0) out += " \\/ ";
    const bool parens = rows.size() > 1 && rows[i].size() > 1;
    if (parens) out += '(';
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j != 0) out += " /\\ ";
      out += rows[i][j].str();
    }
    if (parens) out += ')';
  }
  return out;
}

LTerm JoinMeetForm::to_term() const {
  std::optional<LTerm> result;
  for (const auto& row : rows) {
    std::optional<LTerm> m;
    for (const auto& g : row) m = m ? LTerm::meet(*m, LTerm::element(g)) : LTerm::element(g);
    result = result ? LTerm::join(*result, *m) : *m;
  }
  if (!result) throw Error(ErrorKind::invalid_argument, "empty join-meet form");
  return *result;
}

namespace {

using Row = std::vector<Word>;
using Rows = std::vector<Row>;

class Normalizer {
 public:
  explicit Normalizer(const NormalizeOptions& options) : options_(options) {}

  Rows run(const LTerm& t) {
    switch (t.kind()) {
      case TermKind::element: return {{t.word()}};
      case TermKind::join: {
        Rows a = run(t.left());
        Rows b = run(t.right());
        check(a.size() + b.size(), total(a) + total(b));
        a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
        return dedupe_rows(std::move(a));
      }
      case TermKind::meet: {
        const Rows a = run(t.left());
        const Rows b = run(t.right());
        check(product(a.size(), b.size()), product(a.size(), total(b)) + product(b.size(), total(a)));
        Rows out;
        for (const auto& ra : a) {
          for (const auto& rb : b) {
            Row row = ra;
            row.insert(row.end(), rb.begin(), rb.end());
            out.push_back(dedupe_entries(std::move(row)));
          }
        }
        return dedupe_rows(std::move(out));
      }
      case TermKind::mul: {
        const Rows a = run(t.left());
        const Rows b = run(t.right());
        check(product(a.size(), b.size()), product(total(a), total(b)));
        Rows out;
        for (const auto& ra : a) {
          for (const auto& rb : b) {
            Row row;
            row.reserve(ra.size() * rb.size());
            for (const auto& x : ra) {
              for (const auto& y : rb) row.push_back(x * y);
            }
            out.push_back(dedupe_entries(std::move(row)));
          }
        }
        return dedupe_rows(std::move(out));
      }
      case TermKind::inv: {
        // (\/_i /\_j g_ij)^-1 = /\_i \/_j g_ij^-1, redistributed: one row per
        // choice function picking an entry from every row.
        const Rows a = run(t.left());
        std::size_t count = 1;
        for (const auto& row : a) count = product(count, row.size());
        check(count, product(count, a.size()));
        Rows out;
        std::vector<std::size_t> pick(a.size(), 0);
        while (true) {
          Row row;
          row.reserve(a.size());
          for (std::size_t i = 0; i < a.size(); ++i) row.push_back(a[i][pick[i]].inverse());
          out.push_back(dedupe_entries(std::move(row)));
          std::size_t i = a.size();
          while (i > 0) {
            --i;
            if (++pick[i] < a[i].size()) break;
            pick[i] = 0;
            if (i == 0) return dedupe_rows(std::move(out));
          }
          if (a.empty()) return dedupe_rows(std::move(out));
        }
      }
    }
    throw Error(ErrorKind::internal, "unknown term kind");
  }

 private:
  static std::size_t total(const Rows& rows) {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.size();
    return n;
  }

  static std::size_t product(std::size_t a, std::size_t b) {
    std::size_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) return SIZE_MAX;
    return out;
  }

  void check(std::size_t rows, std::size_t entries) const {
    if (rows > options_.max_rows) {
      throw Error(ErrorKind::cap_exceeded, "normal form needs more than " +
                                               std::to_string(options_.max_rows) + " rows");
    }
    if (entries > options_.max_entries) {
      throw Error(ErrorKind::cap_exceeded, "normal form needs more than " +
                                               std::to_string(options_.max_entries) + " entries");
    }
  }

  static Row dedupe_entries(Row row) {
    Row out;
    std::unordered_map<std::string, std::vector<std::size_t>> seen;
    for (auto& w : row) {
      auto& bucket = seen[w.group()->bucket_key(w)];
      bool duplicate = false;
      for (std::size_t k : bucket) {
        if (out[k] == w) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      bucket.push_back(out.size());
      out.push_back(std::move(w));
    }
    return out;
  }

  static Rows dedupe_rows(Rows rows) {
    Rows out;
    std::unordered_map<std::string, std::vector<std::size_t>> seen;
    for (auto& row : rows) {
      std::string key;
      for (const auto& w : row) {
        key += w.group()->bucket_key(w);
        key += '/';
      }
      auto& bucket = seen[key];
      bool duplicate = false;
      for (std::size_t k : bucket) {
        if (out[k] == row) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      bucket.push_back(out.size());
      out.push_back(std::move(row));
    }
    return out;
  }

  NormalizeOptions options_;
};

}  // namespace

JoinMeetForm normalize(const LTerm& term, const NormalizeOptions& options) {
  return JoinMeetForm{term.group(), Normalizer(options).run(term)};
}

}  // namespace ordlat
