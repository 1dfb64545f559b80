#include "rimhook/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "rimhook/cell.hpp"

namespace rimhook {

std::string to_string(Cell u) {
    return std::to_string(u.row) + "," + std::to_string(u.col);
}

char region_label(Region r) {
    switch (r) {
        case Region::InnerDiag: return 'I';
        case Region::OuterDiag: return 'O';
        case Region::EastRun: return 'A';
        case Region::SouthRun: return 'B';
    }
    return '?';
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i - 1] < parts_[i]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    build_derived();
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_spaces();
    if (pos < text.size() && text[pos] == '-' && pos + 1 == text.size()) {
        return Partition();  // "-" spells the empty partition
    }
    while (pos < text.size()) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{}) {
            throw std::invalid_argument("partition: expected an integer at position " +
                                        std::to_string(pos) + " in '" + std::string(text) + "'");
        }
        parts.push_back(value);
        pos = static_cast<std::size_t>(ptr - text.data());
        skip_spaces();
        if (pos < text.size()) {
            if (text[pos] != ',') {
                throw std::invalid_argument("partition: expected ',' at position " +
                                            std::to_string(pos) + " in '" + std::string(text) +
                                            "'");
            }
            ++pos;
            skip_spaces();
            if (pos == text.size()) {
                throw std::invalid_argument("partition: trailing ',' in '" + std::string(text) +
                                            "'");
            }
        }
    }
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("part index must be positive");
    return i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::conjugate_part(int j) const {
    if (j < 1) throw std::out_of_range("part index must be positive");
    return j <= static_cast<int>(conjugate_.size()) ? conjugate_[static_cast<std::size_t>(j - 1)]
                                                    : 0;
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(cell_count_);
    for (int i = 1; i <= length(); ++i) {
        for (int j = 1; j <= parts_[static_cast<std::size_t>(i - 1)]; ++j) {
            out.push_back({i, j});
        }
    }
    return out;
}

Partition Partition::conjugate() const { return Partition(conjugate_); }

int Partition::hook_length(Cell u) const {
    if (!contains(u)) throw std::out_of_range("cell " + to_string(u) + " is outside the shape");
    return part(u.row) + conjugate_part(u.col) - u.row - u.col + 1;
}

std::vector<Cell> Partition::hook_cells(Cell u) const {
    if (!contains(u)) throw std::out_of_range("cell " + to_string(u) + " is outside the shape");
    std::vector<Cell> out{u};
    for (int j = u.col + 1; j <= part(u.row); ++j) out.push_back({u.row, j});
    for (int i = u.row + 1; i <= conjugate_part(u.col); ++i) out.push_back({i, u.col});
    return out;
}

Region Partition::region_of(Cell u) const {
    if (!contains(u)) throw std::out_of_range("cell " + to_string(u) + " is outside the shape");
    return region_by_content_[static_cast<std::size_t>(u.content() - min_content())];
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

void Partition::build_derived() {
    cell_count_ = 0;
    for (int p : parts_) cell_count_ += static_cast<std::uint64_t>(p);

    conjugate_.assign(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
    for (std::size_t j = 0; j < conjugate_.size(); ++j) {
        int count = 0;
        for (int p : parts_) {
            if (p >= static_cast<int>(j) + 1) ++count;
        }
        conjugate_[j] = count;
    }

    // An outer corner is a row end that sticks out below; an inner corner sits
    // where the next row is strictly shorter but still nonzero. Scanning rows
    // top-down lists both families with descending contents.
    for (int i = 1; i <= length(); ++i) {
        const int len = part(i);
        const int next = part(i + 1);
        if (len > next) outer_corners_.push_back({i, len});
        if (next > 0 && next < len) inner_corners_.push_back({i, next});
    }
    auto contents_of = [](const std::vector<Cell>& cells) {
        std::vector<int> out;
        out.reserve(cells.size());
        for (Cell c : cells) out.push_back(c.content());
        std::sort(out.begin(), out.end());
        return out;
    };
    inner_contents_ = contents_of(inner_corners_);
    outer_contents_ = contents_of(outer_corners_);

    if (!empty()) {
        region_by_content_.resize(static_cast<std::size_t>(diagonal_count()));
        for (int c = min_content(); c <= max_content(); ++c) {
            Region region;
            if (std::binary_search(outer_contents_.begin(), outer_contents_.end(), c)) {
                region = Region::OuterDiag;
            } else if (std::binary_search(inner_contents_.begin(), inner_contents_.end(), c)) {
                region = Region::InnerDiag;
            } else {
                // The corner contents interleave o_1 < i_1 < ... < i_r < o_{r+1};
                // between them the label alternates.
                auto outer_below = std::lower_bound(outer_contents_.begin(),
                                                    outer_contents_.end(), c) -
                                   outer_contents_.begin();
                auto inner_below = std::lower_bound(inner_contents_.begin(),
                                                    inner_contents_.end(), c) -
                                   inner_contents_.begin();
                region = outer_below == inner_below ? Region::EastRun : Region::SouthRun;
            }
            region_by_content_[static_cast<std::size_t>(c - min_content())] = region;
        }
    }
}

}  // namespace rimhook
