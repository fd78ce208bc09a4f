#include "fgl/param_set.hpp"

#include <algorithm>

namespace fgl {

ParamSet ParamSet::generic()
{
	ParamSet ps;
	for (int i = 0; i < 4; ++i)
		ps.p[i] = GradedPoly::variable(i);
	return ps;
}

ParamSet ParamSet::elliptic_sine()
{
	ParamSet ps;
	GradedPoly m = GradedPoly::variable(0);
	ps.p = {GradedPoly(), -(GradedPoly(1) + m), GradedPoly(), m};
	ps.graded = false;
	ps.names = {"k2", "_1", "_2", "_3"};
	ps.label = "elliptic-sine";
	return ps;
}

ParamSet ParamSet::jacobi_genus()
{
	ParamSet ps;
	GradedPoly m = GradedPoly::variable(0);
	GradedPoly one(1);
	ps.p = {GradedPoly(), Rational(2) * (one + m), GradedPoly(), (one - m) * (one - m)};
	ps.graded = false;
	ps.names = {"k2", "_1", "_2", "_3"};
	ps.label = "jacobi-genus";
	return ps;
}

ParamSet ParamSet::ochanine()
{
	ParamSet ps;
	ps.p = {GradedPoly(), GradedPoly::variable(0), GradedPoly(), GradedPoly::variable(1)};
	ps.graded = false;
	ps.names = {"delta", "epsilon", "_2", "_3"};
	ps.label = "ochanine";
	return ps;
}

ParamSet ParamSet::at_point(const std::array<Rational, 4> &values)
{
	ParamSet ps;
	for (int i = 0; i < 4; ++i)
		ps.p[i] = GradedPoly(values[i]);
	ps.graded = false;
	ps.label = "point";
	return ps;
}

UniSeries quartic_series(const ParamSet &ps, int order)
{
	UniSeries q = UniSeries::constant(GradedPoly(1), order);
	for (int i = 0; i < 4; ++i)
		if (i + 1 <= order)
			q.set_coeff(i + 1, ps.p[i]);
	return q;
}

} // namespace fgl
