#include "wfcsc/instance.hpp"

#include <algorithm>
#include <sstream>

namespace wfcsc {

Instance build_instance(std::size_t universe_size,
                        const std::vector<std::vector<int>>& raw_sets,
                        std::string name, BuildStats* stats) {
    if (universe_size < 1)
        throw BuildError("universe_size must be >= 1");

    BuildStats local;
    Instance inst;
    inst.universe_size_ = universe_size;
    inst.name_ = std::move(name);

    for (std::size_t i = 0; i < raw_sets.size(); ++i) {
        BitVector bits(universe_size);
        std::size_t kept = 0;
        for (int e : raw_sets[i]) {
            if (e < 1 || static_cast<std::size_t>(e) > universe_size) {
                std::ostringstream msg;
                msg << "element out of range: set " << i << ", element " << e
                    << " (universe is 1.." << universe_size << ")";
                throw BuildError(msg.str());
            }
            const std::size_t e0 = static_cast<std::size_t>(e - 1);
            if (bits.test(e0)) {
                ++local.duplicate_elements_collapsed;
            } else {
                bits.set(e0);
                ++kept;
            }
        }
        if (kept == 0) {
            ++local.empty_sets_dropped;
            continue;
        }
        inst.sets_.push_back(std::move(bits));
    }

    const std::size_t m = inst.sets_.size();
    BitVector covered(universe_size);
    for (const auto& s : inst.sets_) covered |= s;
    if (!covered.all()) {
        std::ostringstream msg;
        msg << "uncoverable elements: {";
        bool first = true;
        for (std::size_t x = 0; x < universe_size; ++x) {
            if (!covered.test(x)) {
                if (!first) msg << ", ";
                msg << (x + 1);
                first = false;
            }
        }
        msg << "}";
        throw BuildError(msg.str());
    }

    inst.set_elements_.resize(m);
    inst.element_to_sets_.assign(universe_size, BitVector(m));
    inst.element_sets_.resize(universe_size);
    for (std::size_t s = 0; s < m; ++s) {
        inst.sets_[s].for_each_set([&](std::size_t x) {
            inst.set_elements_[s].push_back(static_cast<ElemId>(x));
            inst.element_to_sets_[x].set(s);
            inst.element_sets_[x].push_back(static_cast<SetId>(s));
        });
    }

    if (stats) *stats = local;
    return inst;
}

bool Instance::audit() const {
    BitVector covered(universe_size_);
    for (std::size_t s = 0; s < sets_.size(); ++s) {
        if (sets_[s].none()) return false;
        covered |= sets_[s];
    }
    if (!covered.all()) return false;
    for (std::size_t x = 0; x < universe_size_; ++x) {
        for (std::size_t s = 0; s < sets_.size(); ++s) {
            if (sets_[s].test(x) != element_to_sets_[x].test(s)) return false;
        }
        std::size_t listed = 0;
        for (SetId s : element_sets_[x]) {
            if (!sets_[static_cast<std::size_t>(s)].test(x)) return false;
            ++listed;
        }
        if (listed != element_to_sets_[x].count()) return false;
    }
    return true;
}

namespace {

BitVector union_of(const Instance& instance, std::span<const SetId> selection) {
    BitVector covered(instance.universe_size());
    for (SetId s : selection) {
        if (!instance.valid_set_id(s))
            throw BuildError("unknown set identifier: " + std::to_string(s));
        covered |= instance.set_bits(s);
    }
    return covered;
}

}  // namespace

bool is_cover(const Instance& instance, const Cover& selection) {
    return union_of(instance, selection.selected).all();
}

std::size_t uncovered_count(const Instance& instance, std::span<const SetId> selection) {
    return instance.universe_size() - union_of(instance, selection).count();
}

}  // namespace wfcsc
