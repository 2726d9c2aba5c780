#include "matroid/iso.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

namespace matroid {

namespace {
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}
}  // namespace

std::string status_name(ClaimReport::Status s) {
  switch (s) {
    case ClaimReport::Status::pass: return "pass";
    case ClaimReport::Status::fail: return "fail";
    case ClaimReport::Status::skipped: return "skipped";
  }
  return "?";
}

std::vector<std::string> element_signatures(const Matroid& m) {
  SetFamily cs = circuits(m), ccs = cocircuits(m);
  std::vector<std::string> sig(m.n());
  for (int e = 0; e < m.n(); ++e) {
    std::vector<int> through, cothrough;
    for (Word c : cs.members) {
      if (c >> e & 1) through.push_back(popcount(c));
    }
    for (Word c : ccs.members) {
      if (c >> e & 1) cothrough.push_back(popcount(c));
    }
    std::sort(through.begin(), through.end());
    std::sort(cothrough.begin(), cothrough.end());
    std::ostringstream os;
    for (int v : through) os << v << ".";
    os << "|";
    for (int v : cothrough) os << v << ".";
    sig[e] = os.str();
  }
  return sig;
}

Fingerprint fingerprint(const Matroid& m) {
  Fingerprint f;
  f.n = m.n();
  f.r = m.rank();
  f.basis_count = m.bases().size();
  for (Word c : circuits(m).members) f.circuit_sizes.push_back(popcount(c));
  for (Word c : cocircuits(m).members) f.cocircuit_sizes.push_back(popcount(c));
  std::sort(f.circuit_sizes.begin(), f.circuit_sizes.end());
  std::sort(f.cocircuit_sizes.begin(), f.cocircuit_sizes.end());
  f.element_signatures = element_signatures(m);
  std::sort(f.element_signatures.begin(), f.element_signatures.end());
  std::ostringstream os;
  os << f.n << ";" << f.r << ";" << f.basis_count << ";C";
  for (int v : f.circuit_sizes) os << v << ",";
  os << ";D";
  for (int v : f.cocircuit_sizes) os << v << ",";
  os << ";S";
  for (const auto& s : f.element_signatures) os << s << "/";
  f.token = os.str();
  return f;
}

namespace {

struct IsoSearch {
  const Matroid& a;
  const Matroid& b;
  std::vector<std::string> sig_a, sig_b;
  std::vector<int> order;    // a-elements, by (signature, label)
  std::vector<int> perm;     // a-element -> b-element, -1 unassigned
  Word used_b = 0;
  Word assigned_a = 0;

  bool consistent(int ae, int be) const {
    // prefix rank plus all small subsets through the new element
    Word sa = static_cast<Word>(assigned_a | (1u << ae));
    Word sb = static_cast<Word>(used_b | (1u << be));
    if (a.rank_of(sa) != b.rank_of(sb)) return false;
    std::vector<int> prev;
    for (int e = 0; e < a.n(); ++e) {
      if (assigned_a >> e & 1) prev.push_back(e);
    }
    for (std::size_t i = 0; i < prev.size(); ++i) {
      Word xa2 = static_cast<Word>((1u << ae) | (1u << prev[i]));
      Word xb2 = static_cast<Word>((1u << be) | (1u << perm[prev[i]]));
      if (a.rank_of(xa2) != b.rank_of(xb2)) return false;
      for (std::size_t j = i + 1; j < prev.size(); ++j) {
        Word xa3 = static_cast<Word>(xa2 | (1u << prev[j]));
        Word xb3 = static_cast<Word>(xb2 | (1u << perm[prev[j]]));
        if (a.rank_of(xa3) != b.rank_of(xb3)) return false;
      }
    }
    return true;
  }

  bool maps_bases(const std::vector<int>& p) const {
    for (Word basis : a.bases()) {
      Word image = 0;
      for (int e = 0; e < a.n(); ++e) {
        if (basis >> e & 1) image |= 1u << p[e];
      }
      if (!std::binary_search(b.bases().begin(), b.bases().end(), image)) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order.size()) return maps_bases(perm);
    int ae = order[depth];
    for (int be = 0; be < b.n(); ++be) {
      if (used_b >> be & 1) continue;
      if (sig_a[ae] != sig_b[be]) continue;
      if (!consistent(ae, be)) continue;
      perm[ae] = be;
      used_b |= 1u << be;
      assigned_a |= 1u << ae;
      if (search(depth + 1)) return true;
      perm[ae] = -1;
      used_b &= ~(1u << be);
      assigned_a &= ~(1u << ae);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b) {
  if (a.n() != b.n() || a.rank() != b.rank() || a.bases().size() != b.bases().size()) {
    return std::nullopt;
  }
  IsoSearch s{a, b};
  s.sig_a = element_signatures(a);
  s.sig_b = element_signatures(b);
  auto sorted_a = s.sig_a, sorted_b = s.sig_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;
  s.order.resize(a.n());
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int x, int y) { return s.sig_a[x] < s.sig_a[y]; });
  s.perm.assign(a.n(), -1);
  if (s.search(0)) return s.perm;
  return std::nullopt;
}

bool verify_witness(const Matroid& host, const Matroid& target, const MinorWitness& w) {
  if (w.contract & w.del) return false;
  Relabeled res = minor(host, w.contract, w.del);
  if (res.m.n() != target.n()) return false;
  if (static_cast<int>(w.mapping.size()) != target.n()) return false;
  // mapping sends target elements to surviving host elements; pull back to
  // the minor's dense labels and require an exact basis match
  std::vector<int> perm(target.n(), -1);
  for (int t = 0; t < target.n(); ++t) {
    int host_elem = w.mapping[t];
    if (host_elem < 0 || host_elem >= host.n()) return false;
    int dense = res.old_to_new[host_elem];
    if (dense < 0) return false;
    perm[t] = dense;
  }
  Word seen = 0;
  for (int v : perm) {
    if (seen >> v & 1) return false;
    seen |= 1u << v;
  }
  std::vector<Word> mapped;
  for (Word basis : target.bases()) {
    Word image = 0;
    for (int e = 0; e < target.n(); ++e) {
      if (basis >> e & 1) image |= 1u << perm[e];
    }
    mapped.push_back(image);
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == res.m.bases();
}

std::optional<MinorWitness> has_minor(const Matroid& host, const Matroid& target) {
  if (target.n() > host.n() || target.rank() > host.rank()) return std::nullopt;
  int c_size = host.rank() - target.rank();
  int d_size = host.n() - target.n() - c_size;
  if (d_size < 0) return std::nullopt;

  Fingerprint target_fp = fingerprint(target);
  Word e = full_set(host.n());
  for (std::uint32_t ci = 0; ci < (1u << host.n()); ++ci) {
    Word c = static_cast<Word>(ci);
    if (popcount(c) != c_size) continue;
    // contracting a dependent set drops rank below the target's
    if (host.rank_of(c) != c_size) continue;
    Word rest = static_cast<Word>(e & ~c);
    // iterate D over submasks of rest in increasing numeric order
    for (Word d = 0;; d = static_cast<Word>((d - rest) & rest)) {
      if (popcount(d) == d_size) {
        Relabeled res = minor(host, c, d);
        if (res.m.rank() == target.rank() && fingerprint(res.m) == target_fp) {
          if (auto perm = find_isomorphism(target, res.m)) {
            MinorWitness w;
            w.contract = c;
            w.del = d;
            w.mapping.resize(target.n());
            for (int t = 0; t < target.n(); ++t) w.mapping[t] = res.new_to_old[(*perm)[t]];
            if (verify_witness(host, target, w)) return w;
          }
        }
      }
      if (d == rest) break;
    }
  }
  return std::nullopt;
}

bool in_m4(const Matroid& m) {
  if (m.n() == 0) return false;
  return girth(m) >= 3 && cogirth(m) >= 4;
}

ClaimReport element_structure(const Matroid& m, const std::string& id) {
  auto t0 = Clock::now();
  SetFamily cs = circuits(m), ccs = cocircuits(m);
  ClaimReport rep{id, ClaimReport::Status::pass, "", 0};
  for (int e = 0; e < m.n(); ++e) {
    bool in_triangle = false, in_4cocircuit = false;
    for (Word c : cs.members) {
      if (popcount(c) == 3 && (c >> e & 1)) in_triangle = true;
    }
    for (Word c : ccs.members) {
      if (popcount(c) == 4 && (c >> e & 1)) in_4cocircuit = true;
    }
    if (!in_triangle || !in_4cocircuit) {
      rep.status = ClaimReport::Status::fail;
      rep.detail = "element " + std::to_string(e) + (!in_triangle ? " not in any triangle" : " not in any 4-cocircuit");
      rep.elapsed_ms = ms_since(t0);
      return rep;
    }
  }
  rep.detail = "every element in a triangle and a 4-cocircuit";
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

ClaimReport is_minor_minimal_m4(const Matroid& m, const std::string& id) {
  auto t0 = Clock::now();
  ClaimReport rep{id, ClaimReport::Status::pass, "", 0};
  if (m.n() > 13) {
    rep.status = ClaimReport::Status::skipped;
    rep.detail = "n > 13 exceeds the 3^n sweep budget";
    rep.elapsed_ms = ms_since(t0);
    return rep;
  }
  if (!in_m4(m)) {
    rep.status = ClaimReport::Status::fail;
    rep.detail = "matroid itself is not simple with cogirth >= 4";
    rep.elapsed_ms = ms_since(t0);
    return rep;
  }
  const int n = m.n();
  const Word e = full_set(n);
  // flat rank table access; r'(X) = r(X | C) - r(C) for the minor M/C\D
  std::vector<std::uint8_t> rk(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < (1u << n); ++x) rk[x] = static_cast<std::uint8_t>(m.rank_of(static_cast<Word>(x)));

  for (std::uint32_t ci = 0; ci < (1u << n); ++ci) {
    Word c = static_cast<Word>(ci);
    Word rest = static_cast<Word>(e & ~c);
    for (Word d = 0;; d = static_cast<Word>((d - rest) & rest)) {
      if ((c | d) != 0) {
        Word ground = static_cast<Word>(rest & ~d);
        if (ground == 0) goto next_d;  // empty minor is out of the class
        int rc = rk[c];
        int rminor = rk[ground | c] - rc;
        if (rminor == 0) goto next_d;  // all loops
        {
          std::array<int, kMaxElements> elems;
          int k = 0;
          for (int x = 0; x < n; ++x) {
            if (ground >> x & 1) elems[k++] = x;
          }
          // simple: no loops, no parallel pairs
          for (int i = 0; i < k; ++i) {
            if (rk[(1u << elems[i]) | c] - rc != 1) goto next_d;
            for (int j = i + 1; j < k; ++j) {
              if (rk[(1u << elems[i]) | (1u << elems[j]) | c] - rc != 2) goto next_d;
            }
          }
          // cogirth >= 4: no codependent set of size <= 3
          for (int i = 0; i < k; ++i) {
            Word yi = static_cast<Word>(1u << elems[i]);
            if (rk[(ground ^ yi) | c] - rc < rminor) goto next_d;
            for (int j = i + 1; j < k; ++j) {
              Word yj = static_cast<Word>(yi | (1u << elems[j]));
              if (rk[(ground ^ yj) | c] - rc < rminor) goto next_d;
              for (int l = j + 1; l < k; ++l) {
                Word yl = static_cast<Word>(yj | (1u << elems[l]));
                if (rk[(ground ^ yl) | c] - rc < rminor) goto next_d;
              }
            }
          }
        }
        // this proper minor is still in the class
        rep.status = ClaimReport::Status::fail;
        rep.detail = "proper minor contract=" + set_to_string(c) + " delete=" + set_to_string(d) +
                     " is still simple with cogirth >= 4";
        rep.elapsed_ms = ms_since(t0);
        return rep;
      }
    next_d:
      if (d == rest) break;
    }
  }
  rep.detail = "all 3^" + std::to_string(n) + " proper minors leave the class";
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

}  // namespace matroid
