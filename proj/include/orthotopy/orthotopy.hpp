#pragma once

// Exact-arithmetic toolkit for the orthogonal-type decomposition argument:
// finitely generated abelian groups and their homomorphisms, homotopy-group
// tables of the O/SO/PO/PSO families, the induced-map calculus, the
// connectivity certificate for the joint (tensor, Tr) map, and the matrix
// oracle backing the conjugation lemmas.

#include "bezout.hpp"
#include "certificate_json.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "fgab.hpp"
#include "homotopy.hpp"
#include "induced.hpp"
#include "intmat.hpp"
#include "oracle.hpp"
#include "snf.hpp"
