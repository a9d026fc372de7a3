#include "pgaut/injection.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace pgaut {

void validate_instance(const InjectionInstance& inst) {
    const std::size_t n = inst.ms.size();
    if (n < 2) throw std::invalid_argument("injection: need at least two m_i");
    if (n > kInjectionCap)
        throw std::invalid_argument("injection: instance exceeds cap of " +
                                    std::to_string(kInjectionCap));
    if (inst.m == 0) throw std::invalid_argument("injection: m must be positive");
    for (std::size_t i = 0; i < n; ++i) {
        if (inst.ms[i] == 0)
            throw std::invalid_argument("injection: m_i must be positive");
        if (i + 1 < n && inst.ms[i] <= inst.ms[i + 1])
            throw std::invalid_argument("injection: ms must be strictly decreasing");
    }
}

namespace {

// The association is purely combinatorial on index slots; values never
// influence which subset maps where. Keys are index bitmasks over {2..n}
// (bit i = m_i chosen), images are slot bitmasks (bit 0 = marker,
// bit i = slot of m_i).
//
// Level L is built from level L-1: subsets avoiding index L keep their
// image verbatim (the recursion swaps the old marker role for the new one,
// which is a no-op on bitmasks), subsets s' + {L} map to image(s') + slot L,
// and the singleton {L} receives the unique codomain element no other
// subset uses.
std::map<std::uint32_t, std::uint32_t> build_slot_map(int n) {
    std::map<std::uint32_t, std::uint32_t> assoc;
    assoc[1u << 2] = (1u << 0) | (1u << 1);
    for (int L = 3; L <= n; ++L) {
        const std::vector<std::pair<std::uint32_t, std::uint32_t>> snapshot(
            assoc.begin(), assoc.end());
        for (const auto& [key, img] : snapshot)
            assoc[key | (1u << L)] = img | (1u << L);

        std::unordered_set<std::uint32_t> used;
        used.reserve(assoc.size() * 2);
        for (const auto& [key, img] : assoc) used.insert(img);

        const std::uint32_t full_tail = (1u << (L - 1)) - 1;  // all of {2..L}
        std::uint32_t leftover = 0;
        bool found = false;
        for (std::uint32_t tail = 0; tail < full_tail; ++tail) {
            std::uint32_t cand = (1u << 0) | (1u << 1) | (tail << 2);
            if (!used.count(cand)) {
                leftover = cand;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("injection: no unused codomain element");
        assoc[1u << L] = leftover;
    }
    return assoc;
}

Association make_association(const InjectionInstance& inst, std::uint32_t key,
                             std::uint32_t img) {
    Association a;
    a.from_indices = key;
    a.image_slots = img;
    for (std::size_t i = 1; i <= inst.ms.size(); ++i) {
        if (key & (1u << i)) a.from.push_back(inst.ms[i - 1]);
        if (img & (1u << i)) a.to_without_m.push_back(inst.ms[i - 1]);
    }
    std::sort(a.from.begin(), a.from.end());
    std::sort(a.to_without_m.begin(), a.to_without_m.end());
    a.lhs = 1;
    for (std::uint64_t v : a.from) a.lhs *= v;
    a.rhs = 1;
    for (std::uint64_t v : a.to_without_m) a.rhs *= v;
    return a;
}

}  // namespace

std::vector<Association> full_map(const InjectionInstance& inst) {
    validate_instance(inst);
    auto slot_map = build_slot_map(static_cast<int>(inst.ms.size()));
    std::vector<Association> out;
    out.reserve(slot_map.size());
    for (const auto& [key, img] : slot_map)
        out.push_back(make_association(inst, key, img));
    return out;
}

Association associate(const InjectionInstance& inst,
                      const std::vector<std::uint64_t>& s_b) {
    validate_instance(inst);
    if (s_b.empty()) throw std::invalid_argument("associate: subset must be nonempty");

    std::unordered_map<std::uint64_t, std::size_t> index_of;
    for (std::size_t i = 1; i < inst.ms.size(); ++i)
        index_of[inst.ms[i]] = i + 1;  // value m_{i+1} lives at index i+1

    std::uint32_t key = 0;
    for (std::uint64_t v : s_b) {
        auto it = index_of.find(v);
        if (it == index_of.end())
            throw std::invalid_argument("associate: value " + std::to_string(v) +
                                        " is not in B");
        std::uint32_t bit = 1u << it->second;
        if (key & bit)
            throw std::invalid_argument("associate: duplicate value in subset");
        key |= bit;
    }
    auto slot_map = build_slot_map(static_cast<int>(inst.ms.size()));
    return make_association(inst, key, slot_map.at(key));
}

bool verify_injection_guarantees(const InjectionInstance& inst, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const std::size_t n = inst.ms.size();
    const auto map = full_map(inst);
    const std::size_t expected = (std::size_t(1) << (n - 1)) - 1;
    if (map.size() != expected)
        return fail("domain size " + std::to_string(map.size()) + " != 2^(n-1)-1");

    const std::uint32_t full_a = ((1u << (n + 1)) - 2) | 1u;  // all slots + marker
    std::unordered_set<std::uint32_t> images;
    for (const auto& a : map) {
        if (!(a.image_slots & 1u)) return fail("image missing marker slot");
        if (!(a.image_slots & 2u)) return fail("image missing m_1");
        if (a.image_slots == full_a) return fail("image is not proper in A");
        if (!(a.lhs < a.rhs))
            return fail("product inequality fails: " + to_decimal(a.lhs) +
                        " !< " + to_decimal(a.rhs));
        images.insert(a.image_slots);
    }
    if (images.size() != map.size()) return fail("association is not injective");
    return true;
}

}  // namespace pgaut
