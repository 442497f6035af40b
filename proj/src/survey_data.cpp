#include "stickersim/survey_data.hpp"

#include <sstream>

namespace stickersim {

namespace {

struct SurveyRecord {
    const char* serial;
    std::vector<StickerId> stickers;
};

// Recorded inventories of ten retail displays of the 576-sticker animal
// series (six stickers per packet, 50 packets per display). Each inventory
// is duplicate-free; four of them have fewer than 300 readable entries.
const std::vector<SurveyRecord>& survey_records() {
    static const std::vector<SurveyRecord> records = {
        {"216",
         {
             3, 6, 7, 8, 9, 11, 12, 13, 17, 20, 22, 24, 26, 27, 29, 32, 33, 37, 39, 40, 41, 42,
             46, 47, 48, 52, 53, 56, 59, 61, 63, 64, 65, 66, 68, 69, 70, 72, 73, 78, 82, 83, 88,
             90, 94, 97, 98, 100, 101, 103, 105, 107, 111, 112, 114, 116, 117, 118, 119, 120,
             121, 124, 125, 126, 131, 132, 141, 144, 147, 149, 151, 158, 159, 161, 165, 170,
             171, 173, 174, 177, 178, 180, 181, 184, 185, 192, 193, 197, 202, 203, 205, 206,
             209, 211, 213, 214, 216, 217, 218, 219, 221, 222, 223, 224, 226, 227, 229, 231,
             234, 235, 236, 239, 242, 243, 245, 247, 248, 252, 255, 257, 258, 261, 262, 263,
             264, 267, 268, 271, 272, 273, 276, 277, 279, 284, 285, 286, 289, 291, 292, 294,
             296, 297, 298, 301, 303, 304, 307, 312, 313, 315, 316, 321, 322, 324, 325, 328,
             329, 330, 331, 332, 333, 334, 336, 337, 339, 341, 345, 347, 349, 351, 353, 354,
             356, 359, 361, 362, 363, 364, 367, 370, 371, 373, 374, 375, 382, 384, 385, 386,
             388, 390, 391, 394, 395, 396, 398, 405, 406, 407, 409, 412, 414, 421, 422, 424,
             426, 428, 429, 430, 431, 432, 434, 435, 436, 437, 439, 440, 441, 442, 443, 445,
             446, 452, 454, 455, 456, 458, 459, 460, 461, 462, 464, 465, 466, 470, 472, 473,
             474, 477, 478, 479, 480, 484, 485, 486, 487, 488, 489, 490, 491, 492, 493, 500,
             501, 505, 506, 507, 510, 511, 513, 516, 518, 520, 527, 528, 529, 530, 532, 533,
             534, 536, 541, 542, 545, 546, 547, 549, 553, 555, 556, 559, 560, 562, 563, 566,
             567, 568, 572, 574}},
        {"217",
         {
             3, 4, 5, 6, 9, 12, 13, 16, 20, 21, 22, 26, 27, 28, 29, 30, 31, 32, 34, 35, 36, 40,
             41, 45, 48, 52, 53, 55, 56, 57, 58, 59, 60, 63, 66, 68, 74, 75, 80, 81, 82, 83, 84,
             85, 87, 89, 91, 93, 95, 99, 104, 106, 109, 110, 116, 117, 118, 119, 120, 121, 123,
             127, 134, 135, 138, 143, 146, 147, 151, 155, 156, 157, 158, 161, 162, 164, 169,
             170, 171, 173, 178, 179, 180, 185, 187, 188, 189, 196, 199, 202, 207, 208, 210,
             213, 217, 219, 221, 233, 236, 240, 241, 246, 248, 249, 250, 254, 257, 258, 259,
             260, 261, 262, 263, 264, 266, 267, 268, 271, 272, 273, 277, 278, 280, 286, 287,
             288, 289, 290, 291, 294, 297, 298, 299, 302, 305, 307, 309, 312, 314, 315, 317,
             318, 321, 322, 326, 327, 328, 329, 330, 333, 334, 335, 336, 337, 340, 342, 345,
             350, 351, 352, 354, 355, 356, 357, 358, 359, 361, 362, 363, 365, 366, 368, 369,
             371, 372, 375, 378, 380, 381, 382, 385, 386, 387, 390, 392, 393, 394, 396, 397,
             398, 401, 404, 405, 414, 416, 417, 420, 423, 426, 428, 429, 431, 432, 433, 434,
             436, 438, 439, 441, 445, 446, 447, 451, 453, 455, 461, 465, 466, 468, 470, 471,
             472, 477, 478, 483, 484, 489, 490, 494, 495, 500, 503, 504, 505, 506, 508, 509,
             510, 514, 516, 519, 520, 521, 523, 524, 527, 529, 530, 531, 533, 538, 541, 543,
             544, 547, 549, 550, 552, 557, 559, 560, 564, 566, 567, 568, 572, 573, 575}},
        {"218",
         {
             1, 3, 4, 5, 6, 8, 9, 11, 13, 14, 15, 16, 17, 24, 28, 29, 30, 31, 33, 34, 35, 36,
             37, 38, 40, 41, 46, 47, 55, 56, 57, 58, 59, 61, 62, 63, 66, 67, 69, 73, 74, 75, 78,
             81, 84, 85, 86, 87, 89, 91, 93, 96, 97, 98, 99, 100, 101, 102, 105, 107, 109, 110,
             112, 116, 123, 125, 127, 130, 132, 134, 135, 139, 142, 144, 146, 147, 155, 158,
             163, 164, 165, 169, 173, 174, 175, 177, 184, 187, 188, 189, 190, 193, 197, 199,
             200, 202, 203, 207, 209, 213, 214, 216, 217, 218, 221, 223, 224, 226, 227, 229,
             231, 233, 235, 237, 238, 239, 240, 242, 245, 249, 252, 254, 255, 257, 260, 261,
             262, 263, 264, 266, 271, 273, 277, 278, 279, 280, 283, 284, 290, 292, 293, 294,
             296, 297, 298, 299, 300, 301, 302, 303, 304, 305, 306, 307, 309, 310, 311, 313,
             316, 318, 320, 321, 322, 323, 325, 326, 327, 331, 332, 336, 337, 339, 340, 341,
             342, 343, 347, 348, 349, 351, 353, 355, 358, 359, 361, 362, 364, 367, 368, 370,
             372, 373, 375, 376, 378, 380, 381, 382, 385, 388, 389, 390, 393, 395, 401, 402,
             404, 406, 407, 408, 409, 411, 412, 414, 416, 422, 423, 425, 426, 429, 430, 431,
             436, 437, 440, 443, 444, 445, 447, 449, 451, 453, 455, 456, 458, 459, 462, 463,
             464, 465, 466, 470, 473, 475, 476, 477, 478, 479, 480, 481, 482, 483, 486, 487,
             488, 489, 490, 491, 492, 493, 495, 497, 498, 506, 508, 509, 513, 514, 515, 516,
             517, 522, 523, 528, 529, 530, 532, 534, 536, 537, 540, 543, 544, 545, 547, 548,
             549, 550, 551, 552, 554, 555, 556, 557, 561, 563, 566, 567, 571, 574}},
        {"219",
         {
             1, 4, 5, 7, 8, 10, 13, 15, 16, 17, 20, 21, 24, 26, 27, 28, 29, 30, 31, 32, 34, 35,
             36, 38, 39, 40, 42, 43, 45, 46, 48, 49, 52, 55, 56, 57, 58, 62, 63, 64, 65, 67, 68,
             71, 72, 73, 74, 75, 78, 81, 82, 83, 84, 85, 87, 88, 89, 90, 91, 93, 95, 96, 97, 99,
             102, 103, 104, 105, 106, 109, 110, 111, 112, 113, 114, 115, 117, 118, 119, 120,
             122, 123, 124, 126, 127, 130, 131, 133, 134, 135, 137, 141, 143, 146, 147, 150,
             151, 155, 157, 159, 162, 163, 164, 169, 174, 175, 176, 180, 181, 182, 184, 185,
             187, 188, 189, 195, 196, 199, 200, 203, 204, 205, 207, 217, 219, 221, 227, 228,
             229, 232, 233, 235, 238, 240, 242, 243, 247, 248, 249, 251, 254, 257, 258, 260,
             264, 265, 266, 268, 271, 272, 273, 276, 277, 278, 280, 283, 285, 286, 290, 291,
             293, 296, 297, 299, 300, 302, 305, 308, 309, 311, 312, 316, 318, 319, 320, 323,
             324, 326, 327, 329, 330, 333, 340, 342, 343, 345, 350, 351, 354, 355, 356, 358,
             365, 367, 368, 371, 372, 374, 378, 380, 381, 384, 385, 389, 393, 394, 395, 396,
             397, 398, 401, 404, 405, 407, 409, 412, 416, 417, 421, 423, 424, 425, 427, 428,
             429, 432, 435, 438, 439, 444, 445, 446, 447, 448, 451, 453, 455, 460, 461, 462,
             468, 471, 475, 478, 479, 480, 481, 483, 485, 487, 488, 490, 491, 493, 494, 495,
             499, 500, 501, 503, 507, 508, 509, 510, 511, 514, 515, 518, 520, 521, 522, 523,
             526, 527, 532, 533, 534, 537, 538, 540, 541, 542, 543, 544, 545, 546, 547, 548,
             549, 550, 551, 552, 557, 560, 561, 562, 570, 571, 573, 575}},
        {"220",
         {
             1, 5, 11, 14, 15, 16, 20, 21, 22, 25, 26, 27, 30, 32, 34, 37, 38, 39, 45, 47, 49,
             50, 51, 52, 54, 57, 60, 61, 62, 65, 67, 68, 69, 74, 75, 76, 77, 80, 81, 82, 83, 84,
             92, 93, 95, 96, 100, 101, 102, 104, 106, 114, 117, 119, 120, 121, 122, 123, 125,
             127, 130, 132, 134, 135, 138, 139, 142, 143, 144, 148, 150, 151, 154, 155, 157,
             158, 160, 162, 163, 164, 165, 170, 171, 175, 179, 180, 185, 187, 189, 190, 193,
             194, 196, 197, 199, 200, 208, 209, 210, 212, 214, 216, 219, 223, 224, 225, 231,
             237, 238, 239, 241, 248, 250, 252, 255, 256, 258, 265, 267, 268, 269, 272, 276,
             280, 282, 283, 286, 287, 288, 289, 291, 292, 293, 300, 301, 303, 304, 306, 308,
             309, 310, 311, 312, 314, 315, 317, 320, 321, 322, 323, 325, 327, 329, 330, 331,
             333, 334, 335, 337, 339, 341, 342, 343, 344, 345, 347, 348, 350, 352, 353, 354,
             355, 356, 357, 360, 361, 363, 364, 365, 366, 370, 371, 373, 375, 376, 377, 378,
             381, 382, 384, 386, 388, 389, 394, 396, 397, 398, 399, 401, 402, 405, 406, 408,
             410, 411, 414, 417, 420, 422, 423, 425, 428, 432, 433, 438, 439, 440, 441, 444,
             446, 448, 449, 450, 451, 453, 457, 458, 459, 461, 463, 464, 465, 468, 471, 472,
             473, 475, 476, 481, 482, 485, 486, 494, 496, 497, 498, 499, 500, 503, 504, 508,
             509, 510, 514, 515, 517, 518, 519, 520, 521, 522, 523, 524, 525, 527, 528, 530,
             531, 533, 535, 536, 537, 538, 539, 540, 541, 546, 548, 550, 551, 552, 554, 555,
             557, 558, 560, 561, 562, 563, 564, 568, 571, 572, 573, 574, 575}},
        {"221",
         {
             1, 2, 4, 5, 10, 13, 15, 16, 18, 19, 21, 23, 25, 28, 30, 31, 34, 35, 36, 38, 40, 43,
             44, 45, 49, 50, 51, 54, 55, 57, 58, 60, 62, 67, 71, 74, 75, 76, 77, 79, 80, 81, 84,
             85, 86, 87, 89, 91, 92, 93, 95, 96, 99, 102, 104, 106, 108, 109, 110, 113, 115,
             118, 122, 123, 127, 128, 129, 130, 133, 134, 135, 136, 137, 138, 139, 140, 143,
             145, 146, 148, 150, 152, 153, 154, 155, 156, 157, 160, 161, 162, 163, 164, 166,
             167, 168, 169, 172, 173, 175, 176, 178, 179, 182, 183, 186, 187, 188, 189, 190,
             191, 194, 195, 196, 198, 199, 200, 201, 204, 207, 208, 210, 212, 215, 220, 221,
             225, 228, 230, 232, 233, 236, 237, 238, 240, 241, 244, 246, 249, 250, 251, 253,
             254, 256, 259, 260, 264, 265, 266, 269, 270, 271, 274, 275, 278, 280, 281, 282,
             283, 287, 288, 290, 293, 295, 297, 298, 299, 300, 302, 305, 306, 307, 308, 309,
             311, 314, 317, 318, 319, 320, 323, 326, 327, 335, 336, 338, 340, 342, 343, 344,
             346, 350, 352, 355, 357, 358, 360, 362, 365, 366, 368, 369, 372, 376, 377, 378,
             379, 380, 381, 383, 387, 389, 390, 392, 393, 397, 400, 401, 402, 403, 404, 410,
             411, 413, 415, 416, 417, 418, 419, 420, 423, 425, 427, 429, 433, 434, 438, 444,
             447, 448, 449, 450, 451, 453, 455, 457, 467, 468, 469, 471, 475, 476, 481, 483,
             484, 489, 494, 495, 496, 499, 502, 503, 504, 508, 509, 512, 514, 515, 519, 521,
             522, 523, 524, 525, 526, 529, 531, 535, 537, 538, 539, 540, 543, 544, 548, 549,
             550, 551, 552, 557, 558, 561, 564, 565, 566, 569, 570, 571, 573, 575, 576}},
        {"526",
         {
             1, 2, 3, 4, 5, 7, 9, 10, 13, 14, 15, 18, 22, 23, 24, 26, 29, 30, 33, 36, 39, 40,
             41, 42, 43, 48, 49, 50, 56, 58, 59, 60, 63, 64, 65, 66, 67, 71, 72, 76, 79, 80, 81,
             85, 88, 90, 92, 98, 100, 102, 103, 107, 108, 110, 111, 113, 114, 115, 116, 121,
             122, 124, 126, 130, 131, 133, 134, 135, 136, 137, 138, 139, 140, 141, 147, 150,
             153, 156, 158, 159, 160, 163, 168, 170, 171, 173, 175, 176, 177, 179, 181, 182,
             183, 186, 190, 191, 195, 198, 200, 202, 204, 205, 207, 208, 210, 211, 213, 214,
             217, 218, 221, 224, 226, 228, 230, 232, 237, 241, 243, 244, 245, 247, 250, 251,
             254, 257, 258, 260, 262, 263, 264, 265, 266, 267, 268, 270, 271, 272, 273, 274,
             276, 277, 279, 281, 283, 284, 285, 287, 288, 289, 293, 297, 298, 300, 305, 306,
             307, 308, 310, 311, 312, 313, 314, 315, 317, 319, 321, 322, 324, 332, 334, 335,
             336, 337, 340, 343, 346, 349, 351, 352, 357, 361, 362, 363, 366, 368, 371, 373,
             374, 375, 376, 379, 381, 382, 384, 385, 386, 387, 389, 390, 392, 398, 399, 400,
             402, 403, 404, 405, 411, 414, 415, 419, 420, 421, 423, 424, 425, 426, 427, 429,
             430, 431, 433, 435, 436, 437, 441, 443, 444, 445, 448, 449, 451, 453, 455, 456,
             460, 461, 463, 465, 466, 469, 472, 475, 476, 477, 478, 481, 482, 484, 485, 489,
             490, 492, 498, 499, 501, 504, 506, 507, 511, 513, 515, 516, 518, 519, 522, 524,
             526, 527, 529, 530, 531, 533, 540, 542, 543, 546, 547, 549, 554, 556, 561, 562,
             564, 566, 568, 569, 570, 571, 572, 576}},
        {"530",
         {
             1, 3, 9, 12, 15, 16, 19, 21, 25, 28, 29, 31, 32, 33, 34, 35, 38, 39, 41, 42, 43,
             44, 45, 49, 51, 54, 55, 56, 59, 60, 62, 63, 65, 66, 67, 70, 71, 75, 77, 80, 84, 87,
             89, 91, 94, 95, 96, 99, 102, 104, 106, 107, 109, 113, 114, 115, 116, 117, 118, 122,
             128, 129, 130, 133, 137, 138, 139, 143, 145, 146, 147, 148, 149, 150, 152, 154,
             155, 156, 157, 161, 162, 163, 166, 167, 169, 172, 175, 176, 177, 178, 179, 182,
             188, 190, 192, 194, 196, 199, 200, 201, 202, 204, 206, 208, 210, 212, 213, 215,
             217, 218, 220, 222, 225, 226, 228, 232, 233, 234, 236, 237, 238, 240, 241, 245,
             246, 248, 249, 250, 251, 253, 256, 257, 259, 262, 263, 265, 269, 272, 273, 275,
             276, 277, 278, 279, 282, 283, 284, 286, 287, 288, 290, 293, 295, 299, 300, 302,
             306, 308, 309, 311, 313, 314, 317, 318, 319, 320, 323, 326, 328, 332, 335, 338,
             343, 344, 349, 350, 351, 352, 356, 357, 358, 359, 360, 365, 366, 369, 372, 376,
             377, 378, 380, 383, 384, 385, 387, 389, 391, 392, 393, 394, 397, 401, 402, 403,
             410, 411, 413, 416, 417, 418, 420, 425, 426, 427, 430, 431, 433, 434, 436, 437,
             438, 439, 442, 443, 444, 445, 447, 448, 449, 450, 452, 454, 456, 457, 461, 466,
             467, 468, 470, 471, 474, 475, 476, 477, 478, 481, 483, 484, 485, 490, 492, 494,
             495, 496, 499, 500, 502, 503, 504, 505, 506, 508, 509, 510, 512, 513, 515, 516,
             518, 519, 521, 522, 524, 525, 531, 535, 537, 538, 539, 540, 544, 546, 547, 548,
             550, 551, 553, 556, 557, 558, 559, 561, 562, 564, 565, 567, 570, 571, 573, 575}},
        {"531",
         {
             8, 11, 16, 17, 19, 20, 21, 25, 27, 28, 31, 32, 34, 35, 37, 38, 39, 44, 45, 46, 47,
             49, 50, 51, 52, 54, 55, 57, 61, 62, 65, 68, 69, 70, 73, 74, 75, 76, 77, 78, 82, 83,
             84, 86, 87, 89, 91, 92, 93, 94, 95, 96, 97, 99, 100, 101, 104, 105, 106, 109, 112,
             114, 117, 118, 119, 120, 122, 123, 125, 127, 128, 129, 132, 139, 142, 143, 144,
             145, 146, 148, 149, 150, 151, 152, 154, 155, 157, 160, 161, 162, 164, 165, 166,
             167, 169, 172, 174, 178, 180, 184, 185, 187, 188, 189, 190, 192, 193, 194, 196,
             197, 199, 201, 203, 206, 209, 212, 214, 215, 216, 219, 220, 222, 223, 224, 225,
             227, 229, 231, 233, 234, 235, 236, 238, 239, 240, 242, 246, 248, 249, 252, 253,
             255, 256, 259, 265, 269, 275, 276, 278, 280, 282, 286, 290, 291, 292, 295, 296,
             299, 301, 302, 303, 304, 306, 308, 309, 316, 318, 320, 323, 325, 326, 327, 329,
             330, 331, 333, 338, 339, 341, 342, 344, 345, 347, 348, 350, 353, 354, 355, 356,
             358, 360, 364, 365, 367, 369, 370, 372, 373, 377, 378, 380, 383, 384, 388, 391,
             393, 394, 395, 396, 397, 401, 406, 407, 408, 409, 410, 412, 413, 416, 417, 418,
             422, 428, 432, 434, 438, 439, 440, 442, 447, 448, 449, 450, 452, 454, 457, 458,
             459, 462, 464, 467, 468, 471, 473, 474, 479, 480, 483, 485, 486, 487, 488, 491,
             493, 494, 495, 496, 497, 499, 500, 502, 503, 508, 509, 510, 512, 514, 517, 518,
             520, 521, 523, 525, 528, 532, 534, 535, 536, 537, 538, 539, 541, 544, 545, 546,
             548, 550, 551, 552, 553, 555, 557, 558, 560, 562, 563, 565, 573, 574, 575}},
        {"533",
         {
             4, 8, 11, 13, 14, 17, 20, 21, 22, 25, 27, 28, 31, 32, 35, 36, 37, 40, 45, 46, 47,
             49, 50, 51, 52, 54, 55, 57, 58, 60, 61, 68, 69, 73, 74, 76, 77, 78, 80, 82, 83, 85,
             86, 87, 89, 91, 92, 93, 95, 97, 99, 100, 101, 104, 105, 106, 109, 110, 112, 117,
             119, 120, 121, 122, 123, 125, 127, 132, 138, 139, 142, 143, 144, 146, 148, 150,
             151, 154, 157, 158, 160, 162, 164, 165, 169, 170, 174, 179, 180, 184, 185, 187,
             188, 189, 190, 193, 194, 196, 197, 203, 206, 207, 208, 209, 210, 212, 214, 216,
             219, 221, 223, 224, 225, 227, 229, 231, 233, 235, 239, 240, 241, 242, 246, 248,
             249, 250, 252, 254, 255, 256, 259, 260, 264, 265, 266, 267, 269, 271, 278, 280,
             282, 286, 287, 288, 290, 291, 292, 296, 297, 299, 301, 302, 303, 304, 305, 306,
             308, 310, 314, 315, 316, 317, 318, 321, 322, 325, 326, 327, 329, 330, 331, 333,
             334, 335, 337, 339, 340, 341, 342, 344, 345, 347, 348, 350, 352, 353, 354, 355,
             356, 357, 358, 360, 361, 364, 365, 366, 367, 368, 369, 370, 372, 373, 375, 377,
             380, 382, 388, 393, 394, 395, 396, 397, 404, 406, 407, 408, 409, 410, 412, 414,
             416, 417, 420, 422, 428, 429, 432, 433, 438, 439, 440, 441, 447, 448, 449, 450,
             455, 457, 458, 459, 462, 463, 464, 465, 468, 471, 473, 479, 480, 482, 483, 486,
             487, 488, 491, 493, 494, 495, 496, 497, 498, 499, 500, 503, 504, 510, 514, 517,
             519, 520, 521, 523, 524, 525, 528, 530, 531, 532, 534, 535, 536, 538, 539, 541,
             543, 544, 545, 549, 552, 554, 555, 558, 560, 563, 564, 568, 572, 573, 574, 575}},
    };
    return records;
}

}  // namespace

const std::vector<Display>& amici_survey_displays() {
    static const std::vector<Display> displays = [] {
        const AlbumConfig cfg = AlbumConfig::preset("amici");
        std::vector<Display> out;
        for (const SurveyRecord& rec : survey_records()) {
            Display d;
            d.serial = rec.serial;
            Packet current;
            for (StickerId x : rec.stickers) {
                current.stickers.push_back(x);
                if (std::ssize(current.stickers) == cfg.packet_size) {
                    d.packets.push_back(std::move(current));
                    current = Packet{};
                }
            }
            if (!current.stickers.empty()) d.packets.push_back(std::move(current));
            out.push_back(std::move(d));
        }
        return out;
    }();
    return displays;
}

std::string amici_survey_csv() {
    std::ostringstream csv;
    csv << "display_serial,position,sticker_id\n";
    for (const SurveyRecord& rec : survey_records()) {
        long long pos = 0;
        for (StickerId x : rec.stickers)
            csv << rec.serial << "," << ++pos << "," << x << "\n";
    }
    return csv.str();
}

}  // namespace stickersim
