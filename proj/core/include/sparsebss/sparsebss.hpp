#ifndef SPARSEBSS_SPARSEBSS_HPP
#define SPARSEBSS_SPARSEBSS_HPP

#include "sparsebss/csv.hpp"
#include "sparsebss/datagen.hpp"
#include "sparsebss/deflate.hpp"
#include "sparsebss/detect_global1.hpp"
#include "sparsebss/detect_global2.hpp"
#include "sparsebss/detect_mhc.hpp"
#include "sparsebss/error.hpp"
#include "sparsebss/evalkit.hpp"
#include "sparsebss/fastica.hpp"
#include "sparsebss/preprocess.hpp"
#include "sparsebss/rng.hpp"
#include "sparsebss/types.hpp"

#endif
