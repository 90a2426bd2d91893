#include "pointlat/golden.hpp"

// Reference data: element counts by type, top Moebius values and
// characteristic polynomial coefficients up to dimension six.
namespace pointlat::golden {

const RawEntry* raw_entries(std::size_t& count) {
  static const RawEntry kEntries[] = {
      {0, "mu_top", "", -1, "-1", "d=0 mu_top"},
      {1, "chi", "", 0, "-n_1", "d=1 chi t^0"},
      {1, "chi", "", 1, "1", "d=1 chi t^1"},
      {1, "lambda", "1", -1, "n_1", "d=1 lambda(1)"},
      {1, "mu_top", "", -1, "-1 + n_1", "d=1 mu_top"},
      {2, "chi", "", 0, "-n_1 + 2 n_2 + 3 n_4", "d=2 chi t^0"},
      {2, "chi", "", 1, "-n_2", "d=2 chi t^1"},
      {2, "chi", "", 2, "1", "d=2 chi t^2"},
      {2, "lambda", "1", -1, "n_2", "d=2 lambda(1)"},
      {2, "lambda", "1,1", -1, "3 n_4", "d=2 lambda(1,1)"},
      {2, "lambda", "2", -1, "n_1", "d=2 lambda(2)"},
      {2, "mu_top", "", -1, "-1 + n_1 - n_2 - 3 n_4", "d=2 mu_top"},
      {3, "chi", "", 0, "-n_1 + 2 n_2 - 3 n_3 - 35 n_5 - 180 n_6 - 630 n_7 - 840 n_8 - 280 n_9", "d=3 chi t^0"},
      {3, "chi", "", 1, "-n_2 + 3 n_3 + 15 n_5 + 10 n_6", "d=3 chi t^1"},
      {3, "chi", "", 2, "-n_3", "d=3 chi t^2"},
      {3, "chi", "", 3, "1", "d=3 chi t^3"},
      {3, "lambda", "1", -1, "n_3", "d=3 lambda(1)"},
      {3, "lambda", "1,1", -1, "15 n_5 + 10 n_6", "d=3 lambda(1,1)"},
      {3, "lambda", "1,1,1", -1, "120 n_6 + 630 n_7 + 840 n_8 + 280 n_9", "d=3 lambda(1,1,1)"},
      {3, "lambda", "2", -1, "n_2", "d=3 lambda(2)"},
      {3, "lambda", "2,1", -1, "10 n_5", "d=3 lambda(2,1)"},
      {3, "lambda", "3", -1, "n_1", "d=3 lambda(3)"},
      {3, "mu_top", "", -1, "-1 + n_1 - n_2 + n_3 + 20 n_5 + 170 n_6 + 630 n_7 + 840 n_8 + 280 n_9", "d=3 mu_top"},
      {4, "chi", "", 0, "-n_1 + 2 n_2 - 3 n_3 + 4 n_4 + 250 n_6 + 8995 n_7 + 184835 n_8 + 1873620 n_9 + 9963100 n_10 + 30070425 n_11 + 54435150 n_12 + 60660600 n_13 + 41166125 n_14 + 15765750 n_15 + 2627625 n_16", "d=4 chi t^0"},
      {4, "chi", "", 1, "-n_2 + 3 n_3 - 6 n_4 - 180 n_6 - 1995 n_7 - 11620 n_8 - 30240 n_9 - 37450 n_10 - 23100 n_11 - 5775 n_12", "d=4 chi t^1"},
      {4, "chi", "", 2, "-n_3 + 4 n_4 + 45 n_6 + 70 n_7 + 35 n_8", "d=4 chi t^2"},
      {4, "chi", "", 3, "-n_4", "d=4 chi t^3"},
      {4, "chi", "", 4, "1", "d=4 chi t^4"},
      {4, "lambda", "1,1,1", -1, "15 n_6 + 1470 n_7 + 11340 n_8 + 30240 n_9 + 37450 n_10 + 23100 n_11 + 5775 n_12", "d=4 lambda(1,1,1)"},
      {4, "lambda", "1,1,1,1", -1, "2100 n_7 + 120855 n_8 + 1640520 n_9 + 9585450 n_10 + 29799000 n_11 + 54365850 n_12 + 60660600 n_13 + 41166125 n_14 + 15765750 n_15 + 2627625 n_16", "d=4 lambda(1,1,1,1)"},
      {4, "lambda", "2,1,1", -1, "1260 n_7 + 10080 n_8 + 23940 n_9 + 21000 n_10 + 5775 n_11", "d=4 lambda(2,1,1)"},
      {4, "mu_top", "", -1, "-1 + n_1 - n_2 + n_3 - n_4 - 115 n_6 - 7070 n_7 - 173250 n_8 - 1843380 n_9 - 9925650 n_10 - 30047325 n_11 - 54429375 n_12 - 60660600 n_13 - 41166125 n_14 - 15765750 n_15 - 2627625 n_16", "d=4 mu_top"},
      {5, "chi", "", 0, "-n_1 + 2 n_2 - 3 n_3 + 4 n_4 - 5 n_5 - 1729 n_7 - 444808 n_8 - 51417954 n_9 - 2407629420 n_10 - 54882065700 n_11 - 712167312780 n_12 - 5852028673491 n_13 - 32709595374456 n_14 - 130517797815405 n_15 - 383948623858800 n_16 - 849734640219465 n_17 - 1430012864760480 n_18 - 1833972588151704 n_19 - 1780950846795120 n_20 - 1287845979720300 n_21 - 672060801181770 n_22 - 239171396233770 n_23 - 51946728593760 n_24 - 5194672859376 n_25", "d=5 chi t^0"},
      {5, "chi", "", 1, "-n_2 + 3 n_3 - 6 n_4 + 10 n_5 + 1540 n_7 + 112371 n_8 + 3739176 n_9 + 57660120 n_10 + 479155600 n_11 + 2413802160 n_12 + 7965127170 n_13 + 18028954944 n_14 + 28609896315 n_15 + 31876244400 n_16 + 24459299865 n_17 + 12318095790 n_18 + 3666482820 n_19 + 488864376 n_20", "d=5 chi t^1"},
      {5, "chi", "", 2, "-n_3 + 4 n_4 - 10 n_5 - 630 n_7 - 11760 n_8 - 105084 n_9 - 454860 n_10 - 1089550 n_11 - 1561560 n_12 - 1336335 n_13 - 630630 n_14 - 126126 n_15", "d=5 chi t^2"},
      {5, "chi", "", 3, "-n_4 + 5 n_5 + 105 n_7 + 280 n_8 + 315 n_9 + 126 n_10", "d=5 chi t^3"},
      {5, "chi", "", 4, "-n_5", "d=5 chi t^4"},
      {5, "chi", "", 5, "1", "d=5 chi t^5"},
      {5, "lambda", "1,1,1", -1, "105 n_7 + 9240 n_8 + 102060 n_9 + 453600 n_10 + 1089550 n_11 + 1561560 n_12 + 1336335 n_13 + 630630 n_14 + 126126 n_15", "d=5 lambda(1,1,1)"},
      {5, "lambda", "1,1,1,1", -1, "42000 n_8 + 2796255 n_9 + 52475850 n_10 + 464829750 n_11 + 2391764760 n_12 + 7945667730 n_13 + 18019621620 n_14 + 28608004425 n_15 + 31876244400 n_16 + 24459299865 n_17 + 12318095790 n_18 + 3666482820 n_19 + 488864376 n_20", "d=5 lambda(1,1,1,1)"},
      {5, "lambda", "1,1,1,1,1", -1, "70560 n_8 + 28259280 n_9 + 1892400300 n_10 + 49372299900 n_11 + 678800152800 n_12 + 5726202381900 n_13 + 32397151296510 n_14 + 129991147035750 n_15 + 383340007050000 n_16 + 849257881311840 n_17 + 1429769976354720 n_18 + 1833899747359680 n_19 + 1780941069507600 n_20 + 1287845979720300 n_21 + 672060801181770 n_22 + 239171396233770 n_23 + 51946728593760 n_24 + 5194672859376 n_25", "d=5 lambda(1,1,1,1,1)"},
      {5, "lambda", "2,1,1", -1, "105 n_7 + 15960 n_8 + 170100 n_9 + 642600 n_10 + 1166550 n_11 + 1136520 n_12 + 585585 n_13 + 126126 n_14", "d=5 lambda(2,1,1)"},
      {5, "lambda", "2,1,1,1", -1, "47040 n_8 + 3859380 n_9 + 77275800 n_10 + 682882200 n_11 + 3311930160 n_12 + 9818128320 n_13 + 18834816000 n_14 + 23991267300 n_15 + 20272652400 n_16 + 10985154180 n_17 + 3473510040 n_18 + 488864376 n_19", "d=5 lambda(2,1,1,1)"},
      {5, "lambda", "2,2,1", -1, "5040 n_8 + 56700 n_9 + 201600 n_10 + 300300 n_11 + 194040 n_12 + 45045 n_13", "d=5 lambda(2,2,1)"},
      {5, "lambda", "3,1,1", -1, "3360 n_8 + 37800 n_9 + 138600 n_10 + 219450 n_11 + 152460 n_12 + 36036 n_13", "d=5 lambda(3,1,1)"},
      {5, "mu_top", "", -1, "-1 + n_1 - n_2 + n_3 - n_4 + n_5 + 714 n_7 + 343917 n_8 + 47783547 n_9 + 2350424034 n_10 + 54403999650 n_11 + 709755072180 n_12 + 5844064882656 n_13 + 32691567050142 n_14 + 130489188045216 n_15 + 383916747614400 n_16 + 849710180919600 n_17 + 1430000546664690 n_18 + 1833968921668884 n_19 + 1780950357930744 n_20 + 1287845979720300 n_21 + 672060801181770 n_22 + 239171396233770 n_23 + 51946728593760 n_24 + 5194672859376 n_25", "d=5 mu_top"},
      {6, "chi", "", 0, "-n_1 + 2 n_2 - 3 n_3 + 4 n_4 - 5 n_5 + 6 n_6 + 13020 n_8 + 30306276 n_9 + 21482580105 n_10 + 4476460758924 n_11 + 385724720114965 n_12 + 17372731634141884 n_13 + 473573588684378182 n_14 + 8594435149519438219 n_15 + 110777945174652868112 n_16 + 1061369389494699244960 n_17 + 7811915116061435525146 n_18 + 45256066666226567391240 n_19 + 210137040306764298507780 n_20 + 792742452459639413305574 n_21 + 2454315914651904858849294 n_22 + 6280878741810399702094119 n_23 + 13349398508879560267264124 n_24 + 23623717675088602759587900 n_25 + 34820649359673839255319726 n_26 + 42668738231115243168001080 n_27 + 43277408079933868947476370 n_28 + 36064659595743867804796080 n_29 + 24416711779347250447184100 n_30 + 13209334741333731036156120 n_31 + 5572094138384063443144992 n_32 + 1765284170332337557943040 n_33 + 394963790210911659497760 n_34 + 55628702846607275985600 n_35 + 3708580189773818399040 n_36", "d=6 chi t^0"},
      {6, "chi", "", 1, "-n_2 + 3 n_3 - 6 n_4 + 10 n_5 - 15 n_6 - 12992 n_8 - 6922440 n_9 - 1253314020 n_10 - 85462425510 n_11 - 2844981329190 n_12 - 55072066969920 n_13 - 692509356770231 n_14 - 6077776702187190 n_15 - 39056313885629040 n_16 - 189868515062882656 n_17 - 714183552466036653 n_18 - 2110751767192248180 n_19 - 4950652071117753000 n_20 - 9265650239791905960 n_21 - 13857984617732497242 n_22 - 16518024125161398840 n_23 - 15574947284449669116 n_24 - 11462658924203487000 n_25 - 6442333859931445476 n_26 - 2669265333214159680 n_27 - 768162249080226000 n_28 - 137087416758932640 n_29 - 11423951396577720 n_30", "d=6 chi t^1"},
      {6, "chi", "", 2, "-n_3 + 4 n_4 - 10 n_5 + 20 n_6 + 6545 n_8 + 808269 n_9 + 40056051 n_10 + 907650744 n_11 + 11350086517 n_12 + 88888289490 n_13 + 471662471280 n_14 + 1779383330725 n_15 + 4911968241180 n_16 + 10078630954392 n_17 + 15457237248453 n_18 + 17651874149910 n_19 + 14793239711250 n_20 + 8833453364736 n_21 + 3557221631964 n_22 + 865778809896 n_23 + 96197645544 n_24", "d=6 chi t^2"},
      {6, "chi", "", 3, "-n_4 + 5 n_5 - 15 n_6 - 1750 n_8 - 49420 n_9 - 638190 n_10 - 4174170 n_11 - 16052344 n_12 - 39399360 n_13 - 63588525 n_14 - 67267200 n_15 - 44900856 n_16 - 17153136 n_17 - 2858856 n_18", "d=6 chi t^3"},
      {6, "chi", "", 4, "-n_5 + 6 n_6 + 210 n_8 + 840 n_9 + 1575 n_10 + 1386 n_11 + 462 n_12", "d=6 chi t^4"},
      {6, "chi", "", 5, "-n_6", "d=6 chi t^5"},
      {6, "chi", "", 6, "1", "d=6 chi t^6"},
      {6, "lambda", "1,1,1", -1, "420 n_8 + 40600 n_9 + 620550 n_10 + 4158000 n_11 + 16046800 n_12 + 39399360 n_13 + 63588525 n_14 + 67267200 n_15 + 44900856 n_16 + 17153136 n_17 + 2858856 n_18", "d=6 lambda(1,1,1)"},
      {6, "lambda", "1,1,1,1", -1, "105 n_8 + 388080 n_9 + 32389875 n_10 + 847573650 n_11 + 11095663425 n_12 + 88232164020 n_13 + 470574214110 n_14 + 1778211935500 n_15 + 4911176169900 n_16 + 10078325056800 n_17 + 15457185789045 n_18 + 17651874149910 n_19 + 14793239711250 n_20 + 8833453364736 n_21 + 3557221631964 n_22 + 865778809896 n_23 + 96197645544 n_24", "d=6 lambda(1,1,1,1)"},
      {6, "lambda", "1,1,1,1,1", -1, "1829520 n_9 + 817016760 n_10 + 72235270800 n_11 + 2647690791900 n_12 + 53345363951880 n_13 + 682682216596380 n_14 + 6039039035429400 n_15 + 38946366176117400 n_16 + 189638773413289200 n_17 + 713826716560797840 n_18 + 2110340393930648880 n_19 + 4950304696313776800 n_20 + 9265441477593100800 n_21 + 13857900072549583050 n_22 + 16518003442667606880 n_23 + 15574944975706176060 n_24 + 11462658924203487000 n_25 + 6442333859931445476 n_26 + 2669265333214159680 n_27 + 768162249080226000 n_28 + 137087416758932640 n_29 + 11423951396577720 n_30", "d=6 lambda(1,1,1,1,1)"},
      {6, "lambda", "1,1,1,1,1,1", -1, "4011840 n_9 + 11413776150 n_10 + 3444031510920 n_11 + 341035483477150 n_12 + 16334107213023600 n_13 + 458689729433265330 n_14 + 8450977741650944500 n_15 + 109792467460902806580 n_16 + 1056347419381332078000 n_17 + 7792389750829016643310 n_18 + 45197004798213378970860 n_19 + 209996223288982641611100 n_20 + 792475775069757320141600 n_21 + 2453913578583257706865950 n_22 + 6280395970196377852122300 n_23 + 13348940867374682005436000 n_24 + 23623379361553534532970000 n_25 + 34820458479536167782093750 n_26 + 42668658867461724953856000 n_27 + 43277385167426660997596850 n_28 + 36064655494545316433394600 n_29 + 24416711436628708549852500 n_30 + 13209334741333731036156120 n_31 + 5572094138384063443144992 n_32 + 1765284170332337557943040 n_33 + 394963790210911659497760 n_34 + 55628702846607275985600 n_35 + 3708580189773818399040 n_36", "d=6 lambda(1,1,1,1,1,1)"},
      {6, "lambda", "2,1,1", -1, "840 n_8 + 105210 n_9 + 1486800 n_10 + 8339100 n_11 + 25225200 n_12 + 46576530 n_13 + 54444390 n_14 + 39414375 n_15 + 16144128 n_16 + 2858856 n_17", "d=6 lambda(2,1,1)"},
      {6, "lambda", "2,1,1,1", -1, "892080 n_9 + 83349000 n_10 + 2170822500 n_11 + 26591796000 n_12 + 189359450280 n_13 + 876055780600 n_14 + 2806801697700 n_15 + 6458643391200 n_16 + 10866964308200 n_17 + 13416110908200 n_18 + 12029730132420 n_19 + 7626284265600 n_20 + 3240681948504 n_21 + 828136252944 n_22 + 96197645544 n_23", "d=6 lambda(2,1,1,1)"},
      {6, "lambda", "2,1,1,1,1", -1, "2872800 n_9 + 1676581200 n_10 + 164904790050 n_11 + 6298213521600 n_12 + 126458717144760 n_13 + 1557569654921280 n_14 + 12897279885364875 n_15 + 76164200116804800 n_16 + 333794628241774700 n_17 + 1115520582743887320 n_18 + 2894974312598468100 n_19 + 5900420897320950000 n_20 + 9496944246098058750 n_21 + 12073014477589665600 n_22 + 12056810514853269165 n_23 + 9346203461860705440 n_24 + 5507792588210012100 n_25 + 2383822869473725680 n_26 + 714306478210645320 n_27 + 132360264456900480 n_28 + 11423951396577720 n_29", "d=6 lambda(2,1,1,1,1)"},
      {6, "lambda", "2,2,1", -1, "280 n_8 + 65520 n_9 + 919800 n_10 + 4596900 n_11 + 11226600 n_12 + 15315300 n_13 + 12192180 n_14 + 5360355 n_15 + 1009008 n_16", "d=6 lambda(2,2,1)"},
      {6, "lambda", "2,2,1,1", -1, "430920 n_9 + 48365100 n_10 + 1342768350 n_11 + 16595271000 n_12 + 114090786810 n_13 + 489169180500 n_14 + 1396656261000 n_15 + 2757820665600 n_16 + 3836191659300 n_17 + 3764834613540 n_18 + 2561038249770 n_19 + 1152905153400 n_20 + 309695582196 n_21 + 37642556952 n_22", "d=6 lambda(2,2,1,1)"},
      {6, "lambda", "2,2,2", -1, "7560 n_9 + 113400 n_10 + 554400 n_11 + 1201200 n_12 + 1261260 n_13 + 630630 n_14 + 126126 n_15", "d=6 lambda(2,2,2)"},
      {6, "lambda", "3,1,1", -1, "210 n_8 + 45360 n_9 + 642600 n_10 + 3326400 n_11 + 8523900 n_12 + 12132120 n_13 + 9900891 n_14 + 4414410 n_15 + 840840 n_16", "d=6 lambda(3,1,1)"},
      {6, "lambda", "3,1,1,1", -1, "181440 n_9 + 20594700 n_10 + 585169200 n_11 + 7466867100 n_12 + 53238345160 n_13 + 236878922280 n_14 + 700100200800 n_15 + 1424183961200 n_16 + 2028644217600 n_17 + 2026021217220 n_18 + 1394893019520 n_19 + 633079366920 n_20 + 171102531600 n_21 + 20912531640 n_22", "d=6 lambda(3,1,1,1)"},
      {6, "lambda", "3,2,1", -1, "30240 n_9 + 453600 n_10 + 2263800 n_11 + 5128200 n_12 + 5765760 n_13 + 3111108 n_14 + 630630 n_15", "d=6 lambda(3,2,1)"},
      {6, "lambda", "4,1,1", -1, "7560 n_9 + 113400 n_10 + 589050 n_11 + 1432200 n_12 + 1747746 n_13 + 1009008 n_14 + 210210 n_15", "d=6 lambda(4,1,1)"},
      {6, "mu_top", "", -1, "-1 + n_1 - n_2 + n_3 - n_4 + n_5 - n_6 - 5033 n_8 - 24143525 n_9 - 20268685521 n_10 - 4391901811374 n_11 - 382891072820410 n_12 - 17317748416062094 n_13 - 472881550926490706 n_14 - 8588359152133314554 n_15 - 110738893772690579396 n_16 - 1061179531058250163560 n_17 - 7811200947966203878090 n_18 - 45253955932111249292970 n_19 - 210132089669486420466030 n_20 - 792733186818233074764350 n_21 - 2454302056670844347984016 n_22 - 6280862223787140319505175 n_23 - 13349382933932372015240552 n_24 - 23623706212429678556100900 n_25 - 34820642917339979323874250 n_26 - 42668735561849909953841400 n_27 - 43277407311771619867250370 n_28 - 36064659458656451045863440 n_29 - 24416711767923299050606380 n_30 - 13209334741333731036156120 n_31 - 5572094138384063443144992 n_32 - 1765284170332337557943040 n_33 - 394963790210911659497760 n_34 - 55628702846607275985600 n_35 - 3708580189773818399040 n_36", "d=6 mu_top"},
  };
  count = sizeof(kEntries) / sizeof(kEntries[0]);
  return kEntries;
}

}  // namespace pointlat::golden
