/*
   Copyright 2026 The crystal Authors

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

#pragma once

#include "crystal/analysis.hpp"
#include "crystal/catalog.hpp"
#include "crystal/document.hpp"
#include "crystal/expr.hpp"
#include "crystal/gwa.hpp"
#include "crystal/localize.hpp"
#include "crystal/resultant.hpp"
#include "crystal/ring.hpp"
#include "crystal/verify.hpp"
