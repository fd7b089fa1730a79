#include "orbitcodes/linkage.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

namespace orbitcodes {

namespace {

Matrix raw_scaled_rows(const Field& f, const Matrix& base, std::uint64_t exponent) {
    // rows of base, each multiplied by alpha^exponent (representative, no RREF)
    Matrix out(base.rows(), base.cols(), base.q());
    FieldElement g = f.alpha_pow(exponent);
    for (std::size_t i = 0; i < base.rows(); ++i) {
        FieldElement e = f.mul(f.phi_inv(base.row(i)), g);
        auto digits = f.phi(e);
        std::copy(digits.begin(), digits.end(), out.row(i).begin());
    }
    return out;
}

unsigned pairwise_min_distance(const std::vector<Matrix>& members, std::size_t k,
                               unsigned jobs) {
    if (members.size() < 2)
        return static_cast<unsigned>(2 * k); // single member: no pair, report the cap
    auto scan = [&](std::size_t begin, std::size_t end) -> unsigned {
        unsigned best = static_cast<unsigned>(2 * k);
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                std::size_t rk = rank_of_stack(members[i], members[j]);
                unsigned d = static_cast<unsigned>(2 * (rk - k));
                if (d < best) best = d;
                if (best == 0) return best;
            }
        }
        return best;
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1 || members.size() < 64) return scan(0, members.size());
    std::vector<unsigned> results(jobs, static_cast<unsigned>(2 * k));
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    std::size_t chunk = (members.size() + jobs - 1) / jobs;
    for (unsigned t = 0; t < jobs; ++t) {
        std::size_t b = std::min<std::size_t>(t * chunk, members.size());
        std::size_t e = std::min<std::size_t>(b + chunk, members.size());
        threads.emplace_back([&, b, e, t] {
            try {
                results[t] = scan(b, e);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
    return *std::min_element(results.begin(), results.end());
}

} // namespace

ConstituentCode ConstituentCode::from_matrices(std::vector<Matrix> members, unsigned distance) {
    if (members.empty()) throw Error(errc::invalid_argument, "constituent needs members");
    ConstituentCode c;
    c.q_ = members.front().q();
    c.k_ = members.front().rows();
    c.n_cols_ = members.front().cols();
    c.distance_ = distance;
    for (const Matrix& m : members) {
        if (m.rows() != c.k_ || m.cols() != c.n_cols_ || m.q() != c.q_)
            throw Error(errc::dimension_mismatch, "constituent members of mixed shape");
        if (rank(m) != c.k_) throw Error(errc::rank_loss, "constituent member not of rank k");
    }
    c.members_ = std::move(members);
    return c;
}

ConstituentCode ConstituentCode::from_orbit(const OrbitCode& code, unsigned distance) {
    ConstituentCode c;
    const Field& f = code.field();
    c.q_ = f.q();
    c.k_ = code.generator().dim();
    c.n_cols_ = f.n();
    c.distance_ = distance;
    c.field_ = f;
    c.base_ = code.generator().basis();
    c.beta_log_ = code.beta_log();
    c.size_hint_ = code.size();
    return c;
}

ConstituentCode ConstituentCode::from_orbit_subset(const Field& f, Matrix base,
                                                   std::vector<std::uint64_t> exponents,
                                                   std::optional<unsigned> distance) {
    if (exponents.empty()) throw Error(errc::invalid_argument, "empty exponent list");
    if (base.cols() != f.n() || base.q() != f.q())
        throw Error(errc::dimension_mismatch, "base matrix does not match the field");
    if (rank(base) != base.rows()) throw Error(errc::rank_loss, "base matrix not of rank k");
    ConstituentCode c;
    c.q_ = f.q();
    c.k_ = base.rows();
    c.n_cols_ = f.n();
    c.field_ = f;
    c.base_ = std::move(base);
    c.beta_log_ = 1;
    c.exponents_ = std::move(exponents);
    c.size_hint_ = c.exponents_.size();
    if (distance) {
        c.distance_ = *distance;
    } else {
        std::vector<Matrix> mats;
        mats.reserve(c.exponents_.size());
        for (std::uint64_t e : c.exponents_) mats.push_back(raw_scaled_rows(f, c.base_, e));
        c.distance_ = pairwise_min_distance(mats, c.k_, 1);
    }
    return c;
}

std::uint64_t ConstituentCode::size() const {
    if (!members_.empty()) return members_.size();
    return size_hint_;
}

Matrix ConstituentCode::member(std::uint64_t l) const {
    if (l >= size()) throw Error(errc::invalid_argument, "member index out of range");
    if (!members_.empty()) return members_[l];
    std::uint64_t ord = field_.group_order();
    std::uint64_t e = exponents_.empty() ? (beta_log_ % ord) * (l % ord) % ord : exponents_[l];
    return raw_scaled_rows(field_, base_, e);
}

unsigned ConstituentCode::measure_distance() const {
    std::vector<Matrix> mats;
    mats.reserve(size());
    for (std::uint64_t l = 0; l < size(); ++l) mats.push_back(member(l));
    return pairwise_min_distance(mats, k_, 1);
}

namespace {

void require_linkable(const ConstituentCode& a, const ConstituentCode& b) {
    if (a.dim() != b.dim())
        throw Error(errc::dimension_mismatch, "constituents of different dimension k");
    if (a.q() != b.q()) throw Error(errc::dimension_mismatch, "constituents over different F_q");
}

} // namespace

LinkedCode link_two(const ConstituentCode& c1, const ConstituentCode& c2) {
    require_linkable(c1, c2);
    LinkedCode out;
    out.kind_ = LinkedCode::Kind::two;
    out.q_ = c1.q();
    out.k_ = c1.dim();
    out.length_ = c1.length() + c2.length();
    out.distance_ = std::min(c1.distance(), c2.distance());
    BigUint n(c1.size());
    n *= c2.size();
    n += c1.size();
    n += c2.size();
    out.cardinality_ = std::move(n);
    out.constituents_ = {c1, c2};
    return out;
}

LinkedCode link_many(std::vector<ConstituentCode> cs) {
    if (cs.empty()) throw Error(errc::invalid_argument, "no constituents");
    for (const auto& c : cs) require_linkable(cs.front(), c);
    LinkedCode out;
    out.kind_ = LinkedCode::Kind::many;
    out.q_ = cs.front().q();
    out.k_ = cs.front().dim();
    out.length_ = 0;
    out.distance_ = cs.front().distance();
    BigUint n(1);
    for (const auto& c : cs) {
        out.length_ += c.length();
        out.distance_ = std::min(out.distance_, c.distance());
        n *= c.size() + 1;
    }
    n -= 1;
    out.cardinality_ = std::move(n);
    out.constituents_ = std::move(cs);
    return out;
}

LinkedCode link_cyclic(const ConstituentCode& c1, const Field& f2, const Matrix& u2,
                       std::vector<std::uint64_t> exponents) {
    ConstituentCode c2 = ConstituentCode::from_orbit_subset(f2, u2, std::move(exponents));
    require_linkable(c1, c2);
    LinkedCode out;
    out.kind_ = LinkedCode::Kind::cyclic;
    out.q_ = c1.q();
    out.k_ = c1.dim();
    out.length_ = c1.length() + c2.length();
    out.distance_ = std::min(c1.distance(), c2.distance());
    out.cyclic_power_range_ = f2.group_order();
    BigUint n(c1.size());
    n *= out.cyclic_power_range_;
    n += c1.size();
    n += c2.size();
    out.cardinality_ = std::move(n);
    out.constituents_ = {c1, std::move(c2)};
    return out;
}

bool LinkedCode::materializable(std::uint64_t cap) const {
    return cardinality_ <= BigUint(cap);
}

Matrix LinkedCode::member_from_tuple(std::span<const std::uint64_t> tuple) const {
    if (tuple.size() != constituents_.size())
        throw Error(errc::invalid_argument, "tuple arity != constituent count");
    bool all_zero = true;
    for (std::uint64_t l : tuple) all_zero = all_zero && l == 0;
    if (all_zero) throw Error(errc::invalid_argument, "the all-zero tuple is excluded");

    Matrix out(k_, 0, q_);
    for (std::size_t i = 0; i < constituents_.size(); ++i) {
        const ConstituentCode& c = constituents_[i];
        std::uint64_t l = tuple[i];
        Matrix block;
        if (l == 0) {
            block = Matrix(k_, c.length(), q_);
        } else if (kind_ == Kind::cyclic && i == 1) {
            // the mixed part uses all powers; pure second-block members use
            // the exponent list
            if (tuple[0] == 0) {
                if (l > c.size()) throw Error(errc::invalid_argument, "tuple index range");
                block = c.member(l - 1);
            } else {
                if (l > cyclic_power_range_)
                    throw Error(errc::invalid_argument, "tuple index range");
                block = raw_scaled_rows(c.orbit_field(), c.base_matrix(), l - 1);
            }
        } else {
            if (l > c.size()) throw Error(errc::invalid_argument, "tuple index range");
            block = c.member(l - 1);
        }
        out = out.rows() || out.cols() ? hconcat(out, block) : block;
    }
    return out;
}

std::vector<Matrix> LinkedCode::materialize(std::uint64_t cap) const {
    if (!materializable(cap))
        throw Error(errc::invalid_argument,
                    "linked code too large to materialize: " + cardinality_.to_string());
    std::vector<Matrix> out;
    out.reserve(static_cast<std::size_t>(cardinality_.as_u64()));

    if (kind_ == Kind::cyclic) {
        const ConstituentCode& c1 = constituents_[0];
        const ConstituentCode& c2 = constituents_[1];
        Matrix zero1(k_, c1.length(), q_);
        Matrix zero2(k_, c2.length(), q_);
        for (std::uint64_t l = 0; l < c1.size(); ++l)
            out.push_back(hconcat(c1.member(l), zero2));
        for (std::uint64_t l = 0; l < c2.size(); ++l)
            out.push_back(hconcat(zero1, c2.member(l)));
        for (std::uint64_t l = 0; l < c1.size(); ++l) {
            Matrix left = c1.member(l);
            for (std::uint64_t m = 0; m < cyclic_power_range_; ++m)
                out.push_back(
                    hconcat(left, raw_scaled_rows(c2.orbit_field(), c2.base_matrix(), m)));
        }
        return out;
    }

    // odometer over (l_1,...,l_t), l_i in [0, N_i], skipping the zero tuple
    std::vector<std::uint64_t> tuple(constituents_.size(), 0);
    while (true) {
        std::size_t pos = tuple.size();
        while (pos > 0 && tuple[pos - 1] == constituents_[pos - 1].size()) {
            tuple[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
        ++tuple[pos - 1];
        out.push_back(member_from_tuple(tuple));
    }
    return out;
}

unsigned verified_min_distance(const LinkedCode& code, unsigned jobs, std::uint64_t cap) {
    std::vector<Matrix> members = code.materialize(cap);
    return pairwise_min_distance(members, code.dim(), jobs);
}

UnionOrbitReport verify_union_of_orbits(const LinkedCode& code) {
    UnionOrbitReport rep;
    if (code.q() != 2) {
        rep.reason = "only stated for q = 2";
        return rep;
    }
    std::vector<std::uint64_t> lengths;
    std::uint64_t group_order = 1;
    for (const auto& c : code.constituents()) {
        if (!c.orbit_backed() || !c.exponents().empty()) {
            rep.reason = "constituents must be full cyclic orbit codes";
            return rep;
        }
        const Field& f = c.orbit_field();
        std::uint64_t ord = f.group_order();
        if (std::gcd(c.beta_log() % ord, ord) != 1) {
            rep.reason = "constituent orbit not primitive";
            return rep;
        }
        if (c.size() != ord) {
            rep.reason = "constituent orbit smaller than 2^n - 1 (best friend larger than F_2)";
            return rep;
        }
        lengths.push_back(f.n());
        group_order *= ord;
    }
    if (lengths.size() > 1) { // a single orbit code is trivially one orbit
        std::uint64_t g = 0;
        for (std::uint64_t l : lengths) g = std::gcd(g, l);
        if (g != 1) {
            rep.reason = "gcd of the lengths is not 1 (the product group is not cyclic)";
            return rep;
        }
    }
    rep.applicable = true;
    rep.group_order = group_order;

    std::vector<Matrix> members = code.materialize();
    std::vector<Matrix> companions;
    for (const auto& c : code.constituents())
        companions.push_back(c.orbit_field().companion_matrix());

    auto canon = [](Matrix m) {
        rref_in_place(m);
        return m.data();
    };
    auto apply_diag = [&](const Matrix& m) {
        Matrix out(m.rows(), 0, m.q());
        std::size_t col = 0;
        for (std::size_t i = 0; i < companions.size(); ++i) {
            std::size_t w = companions[i].rows();
            Matrix block(m.rows(), w, m.q());
            for (std::size_t rr = 0; rr < m.rows(); ++rr)
                for (std::size_t cc = 0; cc < w; ++cc) block(rr, cc) = m(rr, col + cc);
            Matrix moved = mat_mul(block, companions[i]);
            out = out.cols() || out.rows() ? hconcat(out, moved) : moved;
            col += w;
        }
        return out;
    };

    std::set<std::vector<std::uint8_t>> member_set;
    for (const Matrix& m : members) member_set.insert(canon(m));

    rep.closed = true;
    std::set<std::vector<std::uint8_t>> seen;
    for (const Matrix& m : members) {
        auto key = canon(m);
        if (seen.count(key)) continue;
        // walk the orbit of this member under the diagonal action
        ++rep.orbit_count;
        Matrix cur = m;
        while (true) {
            cur = apply_diag(cur);
            auto k2 = canon(cur);
            if (!member_set.count(k2)) {
                rep.closed = false;
                break;
            }
            if (k2 == key) break;
            seen.insert(k2);
        }
        seen.insert(key);
        if (!rep.closed) break;
    }
    return rep;
}

CardinalityBound check_cardinality_bound(const LinkedCode& code) {
    unsigned q = code.q();
    CardinalityBound out;
    BigUint bound = BigUint::pow(q, static_cast<unsigned>(code.length()));
    bound -= 1;
    bound.divmod_small(q - 1);
    out.bound = std::move(bound);
    out.holds = !(code.cardinality() > out.bound);
    out.equality = code.cardinality() == out.bound;
    bool all_r1 = true;
    for (const auto& c : code.constituents()) {
        if (!c.orbit_backed())
            throw Error(errc::unsupported_parameters,
                        "bound check needs orbit-backed constituents");
        Subspace gen = Subspace::from_matrix(c.orbit_field(), c.base_matrix());
        all_r1 = all_r1 && best_friend_degree(gen) == 1;
    }
    out.equality_expected = (q == 2) && all_r1;
    return out;
}

ConstituentCode greedy_partial_spread(const OrbitCode& orbit,
                                      std::optional<std::vector<std::uint64_t>> accept_list) {
    const Field& f = orbit.field();
    const Matrix& base = orbit.generator().basis();
    const std::size_t k = orbit.generator().dim();
    std::uint64_t ord = f.group_order();

    auto raw_member = [&](std::uint64_t j) {
        return raw_scaled_rows(f, base, orbit.beta_log() % ord * (j % ord) % ord);
    };

    // exponents are translated to powers of alpha for the subset constituent
    std::vector<std::uint64_t> chosen_alpha;
    std::vector<Matrix> mats;
    if (accept_list) {
        for (std::uint64_t j : *accept_list) {
            if (j >= orbit.size())
                throw Error(errc::invalid_argument, "accepted exponent out of orbit range");
            Matrix m = raw_member(j);
            for (std::size_t i = 0; i < mats.size(); ++i) {
                if (rank_of_stack(mats[i], m) != 2 * k)
                    throw Error(errc::not_partial_spread,
                                "members " + std::to_string((*accept_list)[i]) + " and " +
                                    std::to_string(j) + " intersect nontrivially");
            }
            mats.push_back(std::move(m));
            chosen_alpha.push_back(orbit.beta_log() % ord * (j % ord) % ord);
        }
    } else {
        for (std::uint64_t j = 0; j < orbit.size(); ++j) {
            Matrix m = raw_member(j);
            bool ok = true;
            for (const Matrix& prev : mats) {
                if (rank_of_stack(prev, m) != 2 * k) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                mats.push_back(std::move(m));
                chosen_alpha.push_back(orbit.beta_log() % ord * (j % ord) % ord);
            }
        }
    }
    // pairwise trivial intersections make the distance exactly 2k
    return ConstituentCode::from_orbit_subset(f, base, std::move(chosen_alpha),
                                              static_cast<unsigned>(2 * k));
}

} // namespace orbitcodes
