/*
   Copyright 2026 The mqg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MQG_MQG_HPP
#define MQG_MQG_HPP

#include "mqg/bimodule.hpp"
#include "mqg/cocycle.hpp"
#include "mqg/corep.hpp"
#include "mqg/cyclotomic.hpp"
#include "mqg/error.hpp"
#include "mqg/linalg.hpp"
#include "mqg/majid_algebra.hpp"
#include "mqg/quiver.hpp"
#include "mqg/serialize.hpp"
#include "mqg/shuffle.hpp"

#endif  // MQG_MQG_HPP
