// Generated by tests/oracles/bounds_oracle.py; do not edit by hand.

pub const KS: [u32; 5] = [3, 4, 6, 8, 12];
pub const RS: [f64; 5] = [0.5, 1.0, 1.3862943611198906188, 2.0, 3.0571418389619963225];
pub const MID_FRACTIONS: [f64; 5] = [0.55, 0.65, 0.75, 0.85, 0.95];
pub const NEAR_FRACTIONS: [f64; 5] = [0.0, 0.1, 0.25, 0.4, 0.5];
pub const EXTRA_DELTAS: [f64; 5] = [0.0, 0.3, 0.7, 1.0, 1.3];
pub const EXTRA_HEIGHTS: [(f64, f64); 5] = [
    (1.0, 1.0),
    (0.5, 2.0),
    (2.0, 3.0),
    (0.9, 10.0),
    (10.0, 10.0),
];

/// Indexed `[k][r][fraction]`, with `delta = fraction * r`.
pub const C1: [[[f64; 5]; 5]; 5] = [
    [
        [
            112.68196238032464869,
            112.68773243653440214,
            112.69212335050936642,
            112.69508122159434561,
            112.69656942033465195,
        ],
        [
            35.755657120009719111,
            35.776530685954192502,
            35.793114265861580648,
            35.804636863872274769,
            35.810543435623884074,
        ],
        [
            22.933910692362501493,
            22.969425382287588259,
            22.99914313154969839,
            23.020582761299761341,
            23.031826161533933094,
        ],
        [
            14.843875735982279182,
            14.900415091831538303,
            14.953377767350240534,
            14.994893167673400898,
            15.017798831131862874,
        ],
        [
            8.8832508476905375696,
            8.9520861239182695454,
            9.0363378606244102611,
            9.1172433720014872998,
            9.167929481075364319,
        ],
    ],
    [
        [
            86.562384198889180536,
            86.573046404495276612,
            86.581195612051647626,
            86.586702342683219099,
            86.589478145950112391,
        ],
        [
            31.63357273086179698,
            31.671000567017533633,
            31.701253851672673293,
            31.722536483116411779,
            31.733527791770130057,
        ],
        [
            21.5061377701832471,
            21.56754266532637291,
            21.620635978230709432,
            21.659855186939729698,
            21.680717964860795253,
        ],
        [
            13.816902846527255301,
            13.907165654544787773,
            13.997521971434845163,
            14.071853448969585584,
            14.114086227035986833,
        ],
        [
            6.7531917094533736082,
            6.8438556417124116691,
            6.9722201769505739442,
            7.1095597094307994126,
            7.2015289373359557234,
        ],
    ],
    [
        [
            79.493430490829350734,
            79.518058886769747826,
            79.537047364993943587,
            79.549958845743737862,
            79.556491605868081352,
        ],
        [
            33.229408444084474819,
            33.310819893407004727,
            33.378934058491268463,
            33.428051788857147013,
            33.453799125499034192,
        ],
        [
            22.351922247377247293,
            22.476143954745039212,
            22.590808079086713284,
            22.679595987558491894,
            22.728190072437890847,
        ],
        [
            12.218713223982602248,
            12.374560703746773592,
            12.552615996932468205,
            12.713873845898989195,
            12.811005014357062097,
        ],
        [
            3.5065472703733249184,
            3.6136654321062971385,
            3.8160887652644234254,
            4.0843543922013455225,
            4.2892978994275579811,
        ],
    ],
    [
        [
            82.008702780829345882,
            82.052584153226457958,
            82.086712745636259546,
            82.110064019682120436,
            82.121923246439313008,
        ],
        [
            35.75619764008354547,
            35.89280811230198034,
            36.0111084028692205,
            36.098549789377088475,
            36.145073059826544135,
        ],
        [
            22.536667736833741728,
            22.730598226473964384,
            22.921664200286893392,
            23.076728900259827306,
            23.164037977495494409,
        ],
        [
            9.9797389263540505937,
            10.187693336063055845,
            10.458644043942978081,
            10.728632346245268158,
            10.900968488900929228,
        ],
        [
            1.6241756647466404335,
            1.7226578319857181927,
            1.9702476540814888027,
            2.3755263947999618279,
            2.7280482683933728553,
        ],
    ],
    [
        [
            91.57539264346001261,
            91.67231687124971207,
            91.749023713883214939,
            91.802165428441082833,
            91.829356704521504451,
        ],
        [
            38.733564638950063952,
            39.001298368851641044,
            39.249629931825266301,
            39.442458264926161722,
            39.548142482451509273,
        ],
        [
            20.41980151507297356,
            20.749109976111392221,
            21.118510537066877208,
            21.447697339875155905,
            21.643809498457423735,
        ],
        [
            5.719312532160370024,
            5.9783770704090742084,
            6.416370272812667246,
            6.943743399140912509,
            7.3213478571553841805,
        ],
        [
            0.29290263100757542427,
            0.35228519312674122619,
            0.61417058122118338705,
            1.2628534156520051963,
            1.9900733567095016073,
        ],
    ],
];

/// Indexed `[k][r][fraction]`, with `delta = fraction * r`.
pub const C2: [[[f64; 5]; 5]; 5] = [
    [
        [
            69.134420940649014719,
            69.132930416114180857,
            69.125155878722424564,
            69.110940754623249384,
            69.098072076589574003,
        ],
        [
            20.98177107407646069,
            20.975827555600637014,
            20.945422210017019974,
            20.892344118508626739,
            20.846985428037392325,
        ],
        [
            12.973603605548677126,
            12.962224942414920144,
            12.905375784827257314,
            12.811540627106322947,
            12.736726906982550336,
        ],
        [
            8.0989652407153020346,
            8.0754850546895366995,
            7.9641795946762336692,
            7.8016863494774002271,
            7.6902696323579304684,
        ],
        [
            4.9643050431086107915,
            4.9106359141489713123,
            4.6873114678804426468,
            4.4448065397409842834,
            4.3284891040893114561,
        ],
    ],
    [
        [
            55.037443455942818107,
            55.034662012407242399,
            55.020182320939988158,
            54.99383074657703565,
            54.970114132212328866,
        ],
        [
            18.428932693980829972,
            18.417851959755296998,
            18.361603370250340731,
            18.265210873786340687,
            18.184723448553013639,
        ],
        [
            11.928519784586289523,
            11.907330393546059046,
            11.803017062267190484,
            11.636779429134866472,
            11.509952715076968706,
        ],
        [
            7.5759340813863904097,
            7.5323213720206079524,
            7.3317248359585740767,
            7.0589947864080012936,
            6.8880339605056194282,
        ],
        [
            4.2531611377427824826,
            4.1541222263595060715,
            3.768839180678141377,
            3.4109223486454287053,
            3.2702588906447850979,
        ],
    ],
    [
        [
            50.406742131843429383,
            50.400189965904176067,
            50.366213176556636175,
            50.304953491059269699,
            50.250459831888644597,
        ],
        [
            18.616429104162381834,
            18.590375283556650381,
            18.460146804207597048,
            18.245059516825296355,
            18.073597248707462554,
        ],
        [
            12.20967496280864144,
            12.159966788969361329,
            11.922341869980295838,
            11.569208483052877945,
            11.322540857972922142,
        ],
        [
            7.3127738368243496182,
            7.210985196040189934,
            6.7699419813694303375,
            6.2490676549718234611,
            5.9762903609361482004,
        ],
        [
            3.4029927834165376859,
            3.1748117062558838708,
            2.396336323606456075,
            1.8633064231060216258,
            1.7230257440545070817,
        ],
    ],
    [
        [
            50.908958072915362696,
            50.897052481052169659,
            50.835554858058453356,
            50.725704945533020532,
            50.629123167137522368,
        ],
        [
            19.603745160628662204,
            19.556492462807273432,
            19.323910254850821876,
            18.953637280727519329,
            18.671843572891371058,
        ],
        [
            12.626806614974137643,
            12.536858537825154327,
            12.119233529344727457,
            11.54019811233850064,
            11.169928549861840303,
        ],
        [
            6.9503269574049782168,
            6.7670738300226360525,
            6.0184253696676870708,
            5.2488622089816072428,
            4.9123605028703867312,
        ],
        [
            3.1591219617599356495,
            2.7535357855929810696,
            1.534629704299254088,
            0.91393913485531864234,
            0.80489765509102016778,
        ],
    ],
    [
        [
            54.45454521673572501,
            54.427196523479795506,
            54.287022287499402395,
            54.041257937221281386,
            53.830171422227309516,
        ],
        [
            21.339909547857055242,
            21.231767916472005502,
            20.715535753348639747,
            19.95162515837526188,
            19.421812747786571456,
        ],
        [
            12.859706650803762233,
            12.654787165056281084,
            11.756735693777913751,
            10.671300971848056184,
            10.089814751834861191,
        ],
        [
            6.3130350093097401723,
            5.8997477297952965483,
            4.3949382092392563865,
            3.2161524819716605357,
            2.8573922613287404392,
        ],
        [
            3.7998894893333219526,
            2.9078621318264918439,
            0.80051254720801097075,
            0.19250739776967286415,
            0.14530192383535379611,
        ],
    ],
];

/// Indexed `[k][delta][heights]`.
pub const EXTRA: [[[f64; 5]; 5]; 5] = [
    [
        [
            2.2728873577297383394,
            1.0122873577297383394,
            4.5450873577297383394,
            0.68216734609663465415,
            19.147887357729738339,
        ],
        [
            2.2470099350333645283,
            0.98640993503336452835,
            4.5192099350333645283,
            0.65628992340026084307,
            19.122009935033364528,
        ],
        [
            2.1525318591915019136,
            0.89193185919150191361,
            4.4247318591915019136,
            0.56181184755839822834,
            19.027531859191501914,
        ],
        [
            2.0685395535510525563,
            0.80793955355105255632,
            4.3407395535510525563,
            0.47781954191794887105,
            18.943539553551052556,
        ],
        [
            1.9963891262256586643,
            0.73578912622565866431,
            4.2685891262256586643,
            0.40566911459255497904,
            18.871389126225658664,
        ],
    ],
    [
        [
            2.7445423008216336752,
            1.0157943008216336752,
            5.2019063008216336752,
            0.65753686787330984065,
            22.432042300821633675,
        ],
        [
            2.6967691556424659439,
            0.96802115564246594389,
            5.1541331556424659439,
            0.60976372269414210935,
            22.384269155642465944,
        ],
        [
            2.5320813612176680985,
            0.80333336121766809848,
            4.9894453612176680985,
            0.44507592826934426394,
            22.219581361217668098,
        ],
        [
            2.4005922403812481844,
            0.6718442403812481844,
            4.8579562403812481844,
            0.31358680743292434986,
            22.088092240381248184,
        ],
        [
            2.3019057105258390797,
            0.57315771052583907969,
            4.7592697105258390797,
            0.21490027757751524515,
            21.98940571052583908,
        ],
    ],
    [
        [
            3.5823834370054243467,
            1.1078844007654243467,
            6.1727266817254243467,
            0.8867701018815949306,
            27.945664687005424347,
        ],
        [
            3.4722253582444857267,
            0.99772632200448572668,
            6.0625686029644857267,
            0.77661202312065631056,
            27.835506608244485727,
        ],
        [
            3.1329122160922700554,
            0.65841317985227005541,
            5.7232554608122700554,
            0.43729888096844063928,
            27.496193466092270055,
        ],
        [
            2.9141416990613236378,
            0.43964266282132363785,
            5.5044849437813236378,
            0.21852836393749422172,
            27.277422949061323638,
        ],
        [
            2.7885058263971797691,
            0.3140067901571797691,
            5.3788490711171797691,
            0.092892491273350352974,
            27.151787076397179769,
        ],
    ],
    [
        [
            4.3357519169392150183,
            1.3042145313882550183,
            6.8603392469696950183,
            1.1948788506049503897,
            32.614560510689215018,
        ],
        [
            4.1397894253728595756,
            1.1082520398218995756,
            6.6643767554033395756,
            0.99891635903859494709,
            32.418598019122859576,
        ],
        [
            3.5988504151906471556,
            0.56731302963968715562,
            6.1234377452211271556,
            0.45797734885638252707,
            31.877659008940647156,
        ],
        [
            3.3167686896719192755,
            0.28523130412095927548,
            5.8413560197023992755,
            0.17589562333765464693,
            31.595577283421919275,
        ],
        [
            3.1924399566137668383,
            0.16090257106280683831,
            5.7170272866442468383,
            0.051566890279502209767,
            31.471248550363766838,
        ],
    ],
    [
        [
            5.6986080326905854238,
            1.8531164129704557819,
            7.7556848440346167411,
            1.8302944729483873163,
            40.513543716894686986,
        ],
        [
            5.266932758983588905,
            1.4214411392634592631,
            7.3240095703276202223,
            1.3986191992413907975,
            40.081868443187690467,
        ],
        [
            4.3015664302517504158,
            0.45607481053162077386,
            6.3586432415957817331,
            0.43325287050955230827,
            39.116502114455851978,
        ],
        [
            3.9707866587000855573,
            0.1252950389799559154,
            6.0278634700441168746,
            0.10247309895788744982,
            38.78572234290418712,
        ],
        [
            3.8841822935564666401,
            0.038690673836336998193,
            5.9412591049004979574,
            0.015868733814268532608,
            38.699117977760568203,
        ],
    ],
];

pub const TAIL_K3_R3_D20: f64 = 2.4384963098609480164e-8;
pub const PARABOLIC_I_K3: f64 = 2.3572824856231175854;
pub const MAJORANT_I_2I_K100: f64 = 7.6691592372660095307e-6;

/// `(k, r, delta, closed form, exact)` for the tail allowance.
pub const TAIL_GRID: [(u32, f64, f64, f64, f64); 12] = [
    (3, 0.5, 0.3, 160.48628994345650923, 46.445769003994419593),
    (3, 1.386, 1.0, 19.112821363417926687, 8.5770894044901313374),
    (3, 3.0, 2.0, 2.3949148684008657701, 1.4350609132402508794),
    (
        3,
        3.0,
        8.0,
        0.0039805525091092957775,
        0.000017275473732990571078,
    ),
    (5, 0.5, 0.3, 59.071991026471241102, 25.197453026405453871),
    (5, 1.386, 1.0, 5.6738372488519461128, 3.7411786948226707102),
    (5, 3.0, 2.0, 0.2492960874772230914, 0.20131470031024150947),
    (
        5,
        3.0,
        8.0,
        2.4003785450454634086e-9,
        2.5706463297855786923e-11,
    ),
    (10, 0.5, 0.3, 23.181393137210481125, 12.673334222269231528),
    (10, 1.386, 1.0, 1.059059947260664817, 0.85917637604273998654),
    (
        10,
        3.0,
        2.0,
        0.0024643636705013874175,
        0.0022528852908102571207,
    ),
    (
        10,
        3.0,
        8.0,
        3.9587780789080891909e-24,
        9.8552095392485341966e-26,
    ),
];
