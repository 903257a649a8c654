#include "alag/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace alag {

namespace {

void check_shape(const std::vector<int>& shape) {
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] < 0 || (i > 0 && shape[i] > shape[i - 1])) {
      throw std::invalid_argument("tableau shape must be weakly decreasing and non-negative");
    }
  }
}

template <class Cells>
void check_cells(const std::vector<int>& shape, const Cells& cells) {
  if (cells.size() != shape.size()) throw std::invalid_argument("tableau fill has the wrong number of rows");
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (cells[i].size() != static_cast<std::size_t>(shape[i])) {
      throw std::invalid_argument("tableau row " + std::to_string(i) + " does not match its shape");
    }
  }
}

}  // namespace

PermTableau::PermTableau(std::vector<int> shape, Fill fill) : shape_(std::move(shape)), fill_(std::move(fill)) {
  check_shape(shape_);
  check_cells(shape_, fill_);
  for (const auto& row : fill_) {
    for (auto v : row) {
      if (v > 1) throw std::invalid_argument("tableau entries must be 0 or 1");
    }
  }
}

int PermTableau::column_height(int c) const {
  return static_cast<int>(std::count_if(shape_.begin(), shape_.end(), [c](int len) { return len > c; }));
}

BorderLabels border_labels(const std::vector<int>& shape) {
  check_shape(shape);
  BorderLabels labels;
  const int columns = shape.empty() ? 0 : shape.front();
  labels.row_label.resize(shape.size());
  labels.column_label.resize(static_cast<std::size_t>(columns));
  int next = 1;
  int x = columns;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    while (x > shape[r]) labels.column_label[static_cast<std::size_t>(--x)] = next++;
    labels.row_label[r] = next++;
  }
  while (x > 0) labels.column_label[static_cast<std::size_t>(--x)] = next++;
  return labels;
}

bool validate(const PermTableau& t) {
  for (int c = 0; c < t.columns(); ++c) {
    bool one_above = false;
    for (int r = 0; r < t.column_height(c); ++r) {
      if (t.at(r, c)) {
        one_above = true;
        continue;
      }
      if (!one_above) continue;
      for (int left = 0; left < c; ++left) {
        if (t.at(r, left)) return false;
      }
    }
    if (!one_above) return false;
  }
  return true;
}

namespace {

class TableauEnumerator {
 public:
  TableauEnumerator(int n, const std::function<void(const PermTableau&)>& visit) : n_(n), visit_(visit) {}

  void run() {
    for (int rows = n_; rows >= 1; --rows) {
      const int columns = n_ - rows;
      shape_.assign(static_cast<std::size_t>(rows), 0);
      if (columns == 0) {
        fill_shape();
        continue;
      }
      shape_[0] = columns;
      choose_row(1, columns);
    }
  }

 private:
  // Remaining row lengths, weakly decreasing, in increasing lexicographic order.
  void choose_row(std::size_t row, int max_len) {
    if (row == shape_.size()) {
      fill_shape();
      return;
    }
    for (int len = 0; len <= max_len; ++len) {
      shape_[row] = len;
      choose_row(row + 1, len);
    }
  }

  void fill_shape() {
    fill_.assign(shape_.size(), {});
    for (std::size_t r = 0; r < shape_.size(); ++r) fill_[r].assign(static_cast<std::size_t>(shape_[r]), 0);
    has_one_.assign(shape_.size(), 0);
    fill_column(0);
  }

  void fill_column(int c) {
    const int columns = shape_.empty() ? 0 : shape_.front();
    if (c == columns) {
      visit_(PermTableau(shape_, fill_));
      return;
    }
    const int height =
        static_cast<int>(std::count_if(shape_.begin(), shape_.end(), [c](int len) { return len > c; }));
    for (unsigned mask = 1; mask < (1U << height); ++mask) {
      bool ok = true;
      bool one_above = false;
      for (int r = 0; r < height && ok; ++r) {
        const bool one = (mask >> r) & 1U;
        if (one) {
          one_above = true;
        } else if (one_above && has_one_[static_cast<std::size_t>(r)]) {
          ok = false;
        }
      }
      if (!ok) continue;
      const auto saved = has_one_;
      for (int r = 0; r < height; ++r) {
        const bool one = (mask >> r) & 1U;
        fill_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = one ? 1 : 0;
        if (one) has_one_[static_cast<std::size_t>(r)] = 1;
      }
      fill_column(c + 1);
      has_one_ = saved;
    }
  }

  int n_;
  const std::function<void(const PermTableau&)>& visit_;
  std::vector<int> shape_;
  PermTableau::Fill fill_;
  std::vector<std::uint8_t> has_one_;
};

}  // namespace

void for_each_pt(int n, const std::function<void(const PermTableau&)>& visit) {
  if (n < 1) throw std::invalid_argument("for_each_pt: n must be at least 1");
  if (n > 20) throw std::invalid_argument("for_each_pt: n too large");
  TableauEnumerator(n, visit).run();
}

std::vector<PermTableau> enumerate_pt(int n) {
  std::vector<PermTableau> out;
  for_each_pt(n, [&](const PermTableau& t) { out.push_back(t); });
  return out;
}

std::vector<int> unrestricted_rows(const PermTableau& t) {
  std::vector<bool> restricted(static_cast<std::size_t>(t.rows()), false);
  for (int c = 0; c < t.columns(); ++c) {
    bool one_above = false;
    for (int r = 0; r < t.column_height(c); ++r) {
      if (t.at(r, c)) {
        one_above = true;
      } else if (one_above) {
        restricted[static_cast<std::size_t>(r)] = true;
      }
    }
  }
  std::vector<int> out;
  for (int r = 0; r < t.rows(); ++r) {
    if (!restricted[static_cast<std::size_t>(r)]) out.push_back(r);
  }
  return out;
}

std::vector<int> unrestricted_columns(const PermTableau& t) {
  std::vector<bool> restricted(static_cast<std::size_t>(t.columns()), false);
  for (int r = 0; r < t.rows(); ++r) {
    bool one_left = false;
    for (int c = 0; c < t.shape()[static_cast<std::size_t>(r)]; ++c) {
      if (t.at(r, c)) {
        one_left = true;
      } else if (one_left) {
        restricted[static_cast<std::size_t>(c)] = true;
      }
    }
  }
  std::vector<int> out;
  for (int c = 0; c < t.columns(); ++c) {
    if (!restricted[static_cast<std::size_t>(c)]) out.push_back(c);
  }
  return out;
}

int urr(const PermTableau& t) { return static_cast<int>(unrestricted_rows(t).size()); }
int urc(const PermTableau& t) { return static_cast<int>(unrestricted_columns(t).size()); }

AltTableau::AltTableau(std::vector<int> shape, Cells cells) : shape_(std::move(shape)), cells_(std::move(cells)) {
  check_shape(shape_);
  check_cells(shape_, cells_);
}

int AltTableau::up_arrow_row(int c) const {
  for (int r = 0; r < rows() && shape_[static_cast<std::size_t>(r)] > c; ++r) {
    if (at(r, c) == Arrow::up) return r;
  }
  return -1;
}

AltTableau to_alternative(const PermTableau& t) {
  AltTableau::Cells cells(static_cast<std::size_t>(t.rows()));
  for (int r = 0; r < t.rows(); ++r) cells[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(t.shape()[static_cast<std::size_t>(r)]), Arrow::none);

  std::vector<int> rightmost_restricted(static_cast<std::size_t>(t.rows()), -1);
  for (int c = 0; c < t.columns(); ++c) {
    bool one_above = false;
    for (int r = 0; r < t.column_height(c); ++r) {
      if (t.at(r, c)) {
        if (!one_above) cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = Arrow::up;
        one_above = true;
      } else if (one_above) {
        rightmost_restricted[static_cast<std::size_t>(r)] = c;
      }
    }
  }
  for (int r = 0; r < t.rows(); ++r) {
    const int c = rightmost_restricted[static_cast<std::size_t>(r)];
    if (c >= 0) cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = Arrow::left;
  }
  return AltTableau(t.shape(), std::move(cells));
}

bool validate(const AltTableau& a) {
  for (int c = 0; c < a.columns(); ++c) {
    int ups = 0;
    for (int r = 0; r < a.rows() && a.shape()[static_cast<std::size_t>(r)] > c; ++r) {
      const Arrow here = a.at(r, c);
      if (here == Arrow::up) {
        ++ups;
        for (int above = 0; above < r; ++above) {
          if (a.at(above, c) != Arrow::none) return false;
        }
      } else if (here == Arrow::left) {
        for (int left = 0; left < c; ++left) {
          if (a.at(r, left) != Arrow::none) return false;
        }
      }
    }
    if (ups != 1) return false;
  }
  return true;
}

std::vector<int> northwest_free_columns(const AltTableau& a) {
  std::vector<int> out;
  for (int c = 0; c < a.columns(); ++c) {
    const int up = a.up_arrow_row(c);
    bool blocked = false;
    for (int r = 0; r < up && !blocked; ++r) {
      for (int cc = 0; cc < c; ++cc) {
        if (a.at(r, cc) != Arrow::none) {
          blocked = true;
          break;
        }
      }
    }
    if (!blocked) out.push_back(c);
  }
  return out;
}

Permutation phi(const PermTableau& t) {
  const BorderLabels labels = border_labels(t.shape());
  const AltTableau alt = to_alternative(t);

  std::vector<int> word;
  for (int r : unrestricted_rows(t)) word.push_back(labels.row_label[static_cast<std::size_t>(r)]);
  // Row labels increase downwards, so unrestricted_rows is already in label order.

  for (int c = 0; c < t.columns(); ++c) {
    std::vector<int> inserted;
    for (int r = 0; r < alt.rows() && alt.shape()[static_cast<std::size_t>(r)] > c; ++r) {
      if (alt.at(r, c) == Arrow::left) inserted.push_back(labels.row_label[static_cast<std::size_t>(r)]);
    }
    inserted.push_back(labels.column_label[static_cast<std::size_t>(c)]);
    const int anchor = labels.row_label[static_cast<std::size_t>(alt.up_arrow_row(c))];
    auto pos = std::find(word.begin(), word.end(), anchor);
    if (pos == word.end()) throw std::logic_error("phi: up-arrow row not yet placed");
    word.insert(pos, inserted.begin(), inserted.end());
  }
  return Permutation(std::move(word));
}

namespace {

Poly tableau_sum(int n, int urr_shift) {
  std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(n) + 1,
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  for_each_pt(n, [&](const PermTableau& t) {
    ++counts[static_cast<std::size_t>(urr(t))][static_cast<std::size_t>(urc(t))];
  });
  Poly out;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      const auto count = counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (count == 0) continue;
      if (a < urr_shift) throw std::logic_error("tableau with too few unrestricted rows");
      Exponents e;
      e[Var::X] = static_cast<std::uint16_t>(a - urr_shift);
      e[Var::Y] = static_cast<std::uint16_t>(b);
      out.add_term(e, Integer(static_cast<unsigned long>(count)));
    }
  }
  return out;
}

}  // namespace

Poly pt_statistic_sum(int n) { return tableau_sum(n, 0); }

Poly pt_weighted_sum(int n) {
  if (n < 0) throw std::invalid_argument("pt_weighted_sum: n must be non-negative");
  return tableau_sum(n + 1, 1);
}

namespace {

std::string shape_line(const std::vector<int>& shape) {
  std::string out;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(shape[i]);
  }
  return out;
}

}  // namespace

std::string to_text(const PermTableau& t) {
  std::string out = shape_line(t.shape()) + '\n';
  for (const auto& row : t.fill()) {
    for (auto v : row) out += v ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string to_text(const AltTableau& a) {
  std::string out = shape_line(a.shape()) + '\n';
  for (const auto& row : a.cells()) {
    for (auto v : row) out += v == Arrow::up ? '^' : v == Arrow::left ? '<' : '.';
    out += '\n';
  }
  return out;
}

PermTableau parse_tableau(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (ch != '\r') {
      current += ch;
    }
  }
  if (!current.empty()) lines.push_back(current);
  if (lines.empty()) throw std::invalid_argument("parse_tableau: missing shape line");

  std::vector<int> shape;
  if (!lines[0].empty()) {
    std::stringstream ss(lines[0]);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        shape.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_tableau: bad row length \"" + item + "\"");
      }
    }
  }
  if (lines.size() < shape.size() + 1) throw std::invalid_argument("parse_tableau: missing rows");
  PermTableau::Fill fill;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    std::vector<std::uint8_t> row;
    for (char ch : lines[r + 1]) {
      if (ch != '0' && ch != '1') throw std::invalid_argument("parse_tableau: entries must be 0 or 1");
      row.push_back(ch == '1' ? 1 : 0);
    }
    fill.push_back(std::move(row));
  }
  for (std::size_t r = shape.size() + 1; r < lines.size(); ++r) {
    if (!lines[r].empty()) throw std::invalid_argument("parse_tableau: trailing content");
  }
  return PermTableau(std::move(shape), std::move(fill));
}

}  // namespace alag
