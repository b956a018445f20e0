#pragma once

#include "sfs/classifier.hpp"
#include "sfs/continued_fraction.hpp"
#include "sfs/errors.hpp"
#include "sfs/lisca.hpp"
#include "sfs/matrix.hpp"
#include "sfs/plumbing.hpp"
#include "sfs/rational.hpp"
#include "sfs/seifert.hpp"
#include "sfs/serialize.hpp"
#include "sfs/theta.hpp"
#include "sfs/verify.hpp"
