#pragma once

#include "conlab/core/bits.hpp"
#include "conlab/core/cnf.hpp"
#include "conlab/core/election.hpp"
#include "conlab/core/errors.hpp"
#include "conlab/core/format.hpp"
#include "conlab/core/graph.hpp"
#include "conlab/core/limits.hpp"
#include "conlab/core/names.hpp"
#include "conlab/core/ranking.hpp"
#include "conlab/recognition/consensus.hpp"
#include "conlab/recognition/deletion.hpp"
#include "conlab/recognition/fas.hpp"
#include "conlab/recognition/gnd.hpp"
#include "conlab/recognition/vertex_cover.hpp"
#include "conlab/reductions/chain.hpp"
#include "conlab/reductions/gadgets.hpp"
#include "conlab/reductions/kemeny_images.hpp"
#include "conlab/reductions/sat.hpp"
#include "conlab/reductions/verify.hpp"
#include "conlab/solvers/borda.hpp"
#include "conlab/solvers/brute_force.hpp"
#include "conlab/solvers/kemeny.hpp"
#include "conlab/solvers/ordering_dp.hpp"
#include "conlab/solvers/slater.hpp"
#include "conlab/strategic/control.hpp"
#include "conlab/strategic/manipulation.hpp"
