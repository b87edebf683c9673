#include "perron/lattice.hpp"

namespace perron {

LatticeClassification classify(const IntMonicPoly& p, const Rational& x, int irreducibility_cap)
{
    if (p.degree() < 1)
        throw std::invalid_argument("classify: degree must be at least 1");
    LatticeClassification c;
    const DiskClassification d = classify_house(p, x);
    c.in_disk = d.exterior == 0;
    c.strict = c.in_disk && d.boundary == 0;
    const QPoly q = p.to_qpoly();
    c.signature = signature_exact(q);
    c.perron = is_perron_exact(q);
    c.irreducible = p.degree() <= irreducibility_cap && is_irreducible(p, x, irreducibility_cap);
    return c;
}

}  // namespace perron
