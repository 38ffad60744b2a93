#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "swhist/errors.hpp"

namespace swhist {

/**
 * Restart wrapper that bounds the stream length any inner sliding-window
 * instance ever sees: a fresh instance starts at every position 1 mod w and
 * is discarded after ingesting 2w items, so at most two instances are live
 * and one of them always covers the active window. Queries route to the live
 * instance with the largest start position not beyond the window start.
 * Opt-in; the bucketed histogram does not apply it implicitly.
 */
template <typename Inner>
class doubling_wrapper {
public:
    using item_type = typename Inner::item_type;
    using factory_type = std::function<Inner()>;

    doubling_wrapper(std::uint64_t w, factory_type factory)
        : w_(w), factory_(std::move(factory)) {
        if (w_ < 1) throw config_error("doubling_wrapper: window must be >= 1");
    }

    void update(const item_type& item) {
        ++time_;
        if ((time_ - 1) % w_ == 0) {
            if (instances_.size() == 2) instances_.erase(instances_.begin());
            instances_.emplace_back(time_, factory_());
        }
        for (auto& [start, inner] : instances_) inner.update(item);
    }

    /// The live instance whose suffix contains the entire active window.
    const Inner& covering_instance() const {
        if (instances_.empty()) throw empty_error("doubling_wrapper: no items ingested");
        const std::uint64_t ws = window_start();
        const std::pair<std::uint64_t, Inner>* chosen = nullptr;
        for (const auto& entry : instances_) {
            if (entry.first <= ws) chosen = &entry;
        }
        if (!chosen) throw empty_error("doubling_wrapper: no covering instance");
        return chosen->second;
    }

    std::uint64_t covering_start() const {
        if (instances_.empty()) throw empty_error("doubling_wrapper: no items ingested");
        const std::uint64_t ws = window_start();
        std::uint64_t best = 0;
        for (const auto& entry : instances_) {
            if (entry.first <= ws) best = entry.first;
        }
        if (best == 0) throw empty_error("doubling_wrapper: no covering instance");
        return best;
    }

    double query() const
        requires requires(const Inner& x) { { x.query() } -> std::convertible_to<double>; }
    {
        return covering_instance().query();
    }

    std::size_t instance_count() const noexcept { return instances_.size(); }

    std::size_t footprint() const
        requires requires(const Inner& x) { { x.footprint() } -> std::convertible_to<std::size_t>; }
    {
        std::size_t total = 0;
        for (const auto& [start, inner] : instances_) total += inner.footprint();
        return total;
    }

    std::uint64_t time() const noexcept { return time_; }

    std::uint64_t window_start() const noexcept {
        return time_ >= w_ ? time_ - w_ + 1 : 1;
    }

private:
    std::uint64_t w_;
    factory_type factory_;
    std::vector<std::pair<std::uint64_t, Inner>> instances_;
    std::uint64_t time_ = 0;
};

} // namespace swhist
