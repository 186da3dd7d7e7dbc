#include "qcox/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcox {

CoxGroup::CoxGroup(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {
    std::size_t n = rs_->roots.size();
    int m = rs_->num_positive;
    reflections_.resize((std::size_t)m);
    for (int r = 0; r < m; ++r) {
        Elt e;
        e.perm.resize(n);
        for (std::size_t i = 0; i < n; ++i) e.perm[i] = (std::uint16_t)rs_->reflect_root(r, (int)i);
        reflection_lookup_[EltHash{}(e)].push_back(r);
        reflections_[(std::size_t)r] = std::move(e);
    }
    // pick positive roots forming a basis of the span of all roots
    Mat rowspace;
    for (int i = 0; i < m; ++i) {
        Mat trial = rowspace;
        trial.push_back(rs_->root(i));
        if (qcox::rank(trial) > rowspace.size()) {
            rowspace.push_back(rs_->root(i));
            basis_roots_.push_back(i);
        }
        if ((int)basis_roots_.size() == rs_->rank) break;
    }
    // orthogonal complement of the root span
    Mat span_rows;
    for (int i : basis_roots_) span_rows.push_back(rs_->root(i));
    complement_ = kernel_basis(span_rows);
    // columns: basis roots then complement vectors
    std::size_t d = (std::size_t)rs_->ambient;
    Mat cols(d, Vec(d));
    for (std::size_t j = 0; j < basis_roots_.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) cols[i][j] = rs_->root(basis_roots_[j])[i];
    for (std::size_t j = 0; j < complement_.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) cols[i][basis_roots_.size() + j] = complement_[j][i];
    basis_inverse_ = mat_inverse(cols);
}

Elt CoxGroup::identity() const {
    Elt e;
    e.perm.resize(rs_->roots.size());
    for (std::size_t i = 0; i < e.perm.size(); ++i) e.perm[i] = (std::uint16_t)i;
    return e;
}

Elt CoxGroup::mul(const Elt& a, const Elt& b) const {
    Elt r;
    r.perm.resize(a.perm.size());
    for (std::size_t i = 0; i < a.perm.size(); ++i) r.perm[i] = a.perm[b.perm[i]];
    return r;
}

Elt CoxGroup::inv(const Elt& a) const {
    Elt r;
    r.perm.resize(a.perm.size());
    for (std::size_t i = 0; i < a.perm.size(); ++i) r.perm[a.perm[i]] = (std::uint16_t)i;
    return r;
}

bool CoxGroup::is_identity(const Elt& a) const {
    for (std::size_t i = 0; i < a.perm.size(); ++i)
        if (a.perm[i] != i) return false;
    return true;
}

int CoxGroup::element_order(const Elt& a) const {
    Elt p = a;
    int k = 1;
    while (!is_identity(p)) {
        p = mul(p, a);
        ++k;
        if (k > 1000) throw std::runtime_error("element_order: runaway");
    }
    return k;
}

int CoxGroup::reflection_index(const Elt& a) const {
    auto it = reflection_lookup_.find(EltHash{}(a));
    if (it == reflection_lookup_.end()) return -1;
    for (int r : it->second)
        if (reflections_[(std::size_t)r] == a) return r;
    return -1;
}

Mat CoxGroup::matrix_of(const Elt& a) const {
    std::size_t d = (std::size_t)rs_->ambient;
    Mat img(d, Vec(d));
    for (std::size_t j = 0; j < basis_roots_.size(); ++j) {
        const Vec& w = rs_->root(a.perm[(std::size_t)basis_roots_[j]]);
        for (std::size_t i = 0; i < d; ++i) img[i][j] = w[i];
    }
    for (std::size_t j = 0; j < complement_.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) img[i][basis_roots_.size() + j] = complement_[j][i];
    return mat_mul(img, basis_inverse_);
}

int CoxGroup::mov_dim(const Elt& a) const {
    Mat moved;
    for (int b : basis_roots_) {
        if (a.perm[(std::size_t)b] == (std::uint16_t)b) continue;
        moved.push_back(sub(rs_->root(b), rs_->root(a.perm[(std::size_t)b])));
    }
    return (int)qcox::rank(std::move(moved));
}

std::pair<Mat, Mat> CoxGroup::fix_and_mov(const Elt& a) const {
    Mat m = matrix_of(a);
    std::size_t d = m.size();
    Mat m_minus_id = m;
    for (std::size_t i = 0; i < d; ++i) m_minus_id[i][i] -= QuadraticNumber(1);
    Mat fix = kernel_basis(m_minus_id);
    Mat mov = row_space_basis(transpose(m_minus_id));
    return {row_space_basis(fix), mov};
}

bool CoxGroup::is_left_divisor(const Elt& x, const Elt& w) const {
    return reflection_length(w) == reflection_length(x) + reflection_length(mul(inv(x), w));
}

bool CoxGroup::is_right_divisor(const Elt& y, const Elt& w) const {
    return reflection_length(w) == reflection_length(y) + reflection_length(mul(w, inv(y)));
}

std::vector<int> CoxGroup::divisor_reflections(const Elt& w) const {
    int lw = reflection_length(w);
    std::vector<int> out;
    for (int r = 0; r < num_reflections(); ++r)
        if (reflection_length(mul(reflection(r), w)) == lw - 1) out.push_back(r);
    return out;
}

int CoxGroup::pairwise_order(int r, int s) const {
    if (pairwise_order_.empty())
        pairwise_order_.assign((std::size_t)num_reflections(),
                               std::vector<int>((std::size_t)num_reflections(), 0));
    int& cached = pairwise_order_[(std::size_t)r][(std::size_t)s];
    if (cached == 0) {
        cached = element_order(mul(reflection(r), reflection(s)));
        pairwise_order_[(std::size_t)s][(std::size_t)r] = cached;
    }
    return cached;
}

std::vector<std::vector<int>> CoxGroup::reduced_decompositions(const Elt& w,
                                                               std::size_t budget) const {
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    std::size_t visited = 0;
    // DFS over left divisors
    auto rec = [&](auto&& self, const Elt& rest, int len) -> void {
        if (++visited > budget)
            throw BudgetExceeded("reduced_decompositions: budget exceeded");
        if (len == 0) {
            out.push_back(stack);
            return;
        }
        for (int r = 0; r < num_reflections(); ++r) {
            Elt next = mul(reflection(r), rest);
            if (reflection_length(next) != len - 1) continue;
            stack.push_back(r);
            self(self, next, len - 1);
            stack.pop_back();
        }
    };
    rec(rec, w, reflection_length(w));
    return out;
}

std::optional<std::vector<int>> CoxGroup::quasi_coxeter_witness(const Elt& w) const {
    if (reflection_length(w) != rank()) return std::nullopt;
    std::vector<int> stack;
    std::optional<std::vector<int>> found;
    auto rec = [&](auto&& self, const Elt& rest, int len) -> bool {
        if (len == 0) {
            auto closed = rs_->reflection_closure(stack);
            if (closed.size() == rs_->roots.size()) {
                found = stack;
                return true;
            }
            return false;
        }
        for (int r = 0; r < num_reflections(); ++r) {
            Elt next = mul(reflection(r), rest);
            if (reflection_length(next) != len - 1) continue;
            stack.push_back(r);
            if (self(self, next, len - 1)) return true;
            stack.pop_back();
        }
        return false;
    };
    rec(rec, w, rank());
    return found;
}

Elt CoxGroup::coxeter_element() const {
    Elt w = identity();
    for (int s : rs_->simple) w = mul(w, reflection(s));
    return w;
}

Elt CoxGroup::product_of_reflections(const std::vector<int>& refl) const {
    Elt w = identity();
    for (int r : refl) w = mul(w, reflection(r));
    return w;
}

CoxGroup::Subgroup CoxGroup::parabolic_closure(const Elt& x, std::size_t budget) const {
    Mat fix = fix_and_mov(x).first;
    std::vector<int> gens;
    for (int r = 0; r < num_reflections(); ++r) {
        bool orth = true;
        for (const auto& f : fix)
            if (!dot(rs_->root(r), f).is_zero()) { orth = false; break; }
        if (orth) gens.push_back(r);
    }
    Subgroup sg;
    sg.generating_reflections = gens;
    std::vector<Elt> gen_elts;
    for (int r : gens) gen_elts.push_back(reflection(r));
    sg.elements = subgroup_closure(gen_elts, budget);
    return sg;
}

std::vector<Elt> CoxGroup::subgroup_closure(const std::vector<Elt>& gens,
                                            std::size_t budget) const {
    std::vector<Elt> elements{identity()};
    std::unordered_map<Elt, std::size_t, EltHash> seen;
    seen.emplace(elements[0], 0);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (const auto& g : gens) {
            Elt next = mul(elements[i], g);
            if (seen.emplace(next, elements.size()).second) {
                elements.push_back(std::move(next));
                if (elements.size() > budget)
                    throw BudgetExceeded("subgroup_closure: budget exceeded");
            }
        }
    }
    std::sort(elements.begin(), elements.end());
    return elements;
}

const std::vector<Elt>& CoxGroup::all_elements(std::size_t budget) const {
    if (!all_elements_.empty()) return all_elements_;
    std::vector<Elt> gens;
    for (int s : rs_->simple) gens.push_back(reflection(s));
    std::vector<Elt> elements{identity()};
    element_index_.emplace(elements[0], 0);
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (const auto& g : gens) {
            Elt next = mul(elements[i], g);
            if (element_index_.emplace(next, elements.size()).second) {
                elements.push_back(std::move(next));
                if (elements.size() > budget)
                    throw BudgetExceeded("all_elements: budget exceeded");
            }
        }
    all_elements_ = std::move(elements);
    // re-index after the move (iteration order of the map is irrelevant;
    // indices refer to positions in all_elements_)
    element_index_.clear();
    for (std::size_t i = 0; i < all_elements_.size(); ++i)
        element_index_.emplace(all_elements_[i], i);
    return all_elements_;
}

std::size_t CoxGroup::element_index(const Elt& a) const {
    auto it = element_index_.find(a);
    if (it == element_index_.end()) throw std::runtime_error("element_index: unknown element");
    return it->second;
}

std::vector<QuadraticNumber> CoxGroup::char_poly_of(const Elt& a) const {
    return char_poly(matrix_of(a));
}

}  // namespace qcox
