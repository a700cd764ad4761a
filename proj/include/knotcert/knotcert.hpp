#ifndef KNOTCERT_KNOTCERT_HPP
#define KNOTCERT_KNOTCERT_HPP

#include "knotcert/alexander.hpp"
#include "knotcert/cyclotomic.hpp"
#include "knotcert/fixture_io.hpp"
#include "knotcert/fixtures.hpp"
#include "knotcert/fpuni.hpp"
#include "knotcert/fricke.hpp"
#include "knotcert/integer.hpp"
#include "knotcert/integrality.hpp"
#include "knotcert/irreducibility.hpp"
#include "knotcert/newton.hpp"
#include "knotcert/parse.hpp"
#include "knotcert/pipeline.hpp"
#include "knotcert/poly.hpp"
#include "knotcert/repmat.hpp"
#include "knotcert/report.hpp"
#include "knotcert/resultant.hpp"
#include "knotcert/rings.hpp"
#include "knotcert/symmetrize.hpp"
#include "knotcert/words.hpp"

#endif  // KNOTCERT_KNOTCERT_HPP
