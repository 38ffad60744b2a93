#pragma once

#include <concepts>
#include <cstdint>

namespace swhist {

/**
 * Contract for the insertion-only estimators the histogram can host. A fresh
 * instance is obtained by copying a pristine prototype, so copies must carry
 * configuration but no ingested state. value() must be deterministic in the
 * ingested sequence and nonnegative; footprint() counts stored atoms as a
 * memory proxy.
 */
template <typename E>
concept insertion_estimator =
    std::copy_constructible<E> &&
    requires(E est, const E cest, const typename E::item_type& item) {
        typename E::item_type;
        est.ingest(item);
        { cest.value() } -> std::convertible_to<double>;
        { cest.footprint() } -> std::convertible_to<std::size_t>;
    };

/// Counts ingested items; the classic basic-counting plug-in.
template <typename Item>
class count_estimator {
public:
    using item_type = Item;

    void ingest(const Item&) { ++count_; }
    double value() const { return double(count_); }
    std::size_t footprint() const { return 1; }

private:
    std::uint64_t count_ = 0;
};

} // namespace swhist
