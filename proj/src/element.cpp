#include "orelab/element.hpp"

#include "orelab/error.hpp"
#include "orelab/ring.hpp"

namespace orelab {

namespace {

int compare_payload(const RingElement::Payload& a, const RingElement::Payload& b);

int compare_children(const std::vector<RingElement>& a, const std::vector<RingElement>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (int c = RingElement::compare(a[i], b[i]); c != 0) return c;
    }
    return 0;
}

int compare_payload(const RingElement::Payload& a, const RingElement::Payload& b) {
    if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
    switch (a.index()) {
        case 0: {
            auto x = std::get<0>(a), y = std::get<0>(b);
            return x == y ? 0 : (x < y ? -1 : 1);
        }
        case 1: {
            const auto& x = std::get<1>(a);
            const auto& y = std::get<1>(b);
            return x == y ? 0 : (x < y ? -1 : 1);
        }
        case 2:
            return compare_children(std::get<2>(a), std::get<2>(b));
        default: {
            const auto& x = std::get<3>(a);
            const auto& y = std::get<3>(b);
            if (x.indices != y.indices) return x.indices < y.indices ? -1 : 1;
            return compare_children(x.values, y.values);
        }
    }
}

}  // namespace

int RingElement::compare(const RingElement& a, const RingElement& b) {
    return compare_payload(a.payload_, b.payload_);
}

std::string RingElement::str() const { return owner_->format(*this); }

bool operator==(const RingElement& a, const RingElement& b) {
    return RingElement::compare(a, b) == 0;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return a.owner()->add(a, b);
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return a.owner()->sub(a, b);
}

RingElement operator-(const RingElement& a) { return a.owner()->neg(a); }

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return a.owner()->mul(a, b);
}

}  // namespace orelab
