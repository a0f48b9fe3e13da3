#pragma once
// Exact rational angles under the doubling map, rotation cycles of the
// alpha fixed point, and itineraries of angles on a principal vein.

#include "coreentropy/polyalg.hpp"
#include "coreentropy/words.hpp"

#include <string>
#include <vector>

namespace ce {

class Angle {
public:
    Angle() : num_(0), den_(1) {}
    Angle(BigInt num, BigInt den);
    static Angle parse(const std::string& s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    Angle doubled() const { return Angle(num_ * 2, den_); }
    Angle halved() const { return Angle(num_, den_ * 2); }
    Angle plus_half() const { return Angle(num_ + den_, den_ * 2); }  // (theta+1)/2
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

    bool operator==(const Angle& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Angle& o) const { return !(*this == o); }
    bool operator<(const Angle& o) const { return num_ * o.den_ < o.num_ * den_; }

private:
    BigInt num_, den_;
};

struct Classification {
    int preperiod = 0;
    int period = 1;
};

Classification classify(const Angle& theta);
std::vector<Angle> orbit(const Angle& theta, int n);

// Half-open counterclockwise arc [from, to); wraps through 0 when to <= from.
bool in_arc(const Angle& x, const Angle& from, const Angle& to);
bool in_open_arc(const Angle& x, const Angle& from, const Angle& to);

struct AnglePartition {
    Angle theta;
    Angle a;  // theta/2
    Angle b;  // (theta+1)/2
    // 0 for [a, b), 1 for [b, a); boundary points report their half-open side.
    int half(const Angle& x) const { return in_arc(x, a, b) ? 0 : 1; }
    bool on_boundary(const Angle& x) const { return x == a || x == b; }
};
AnglePartition angle_partition(const Angle& theta);

struct RotationCycle {
    int p = 0, q = 0;
    std::vector<Angle> angles;  // increasing
};
RotationCycle rotation_cycle(int p, int q);

struct AngleItineraries {
    FullWord full;
    SimplifiedWord simplified;
};
AngleItineraries angle_to_itineraries(const Angle& theta, int p, int q);

// Smallest periodic angle in the characteristic arc of the p/q limb whose
// itinerary is the given simplified word. For the bulb center 20 this is the
// rotation-cycle angle opening the characteristic arc.
Angle angle_for_word(const SimplifiedWord& w, int p, int q);

}  // namespace ce
