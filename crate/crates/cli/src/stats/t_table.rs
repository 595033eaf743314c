// SPDX-License-Identifier: Apache-2.0
// Copyright The sfc-sym Authors

// Generated with scipy.stats.t.ppf / norm.ppf; do not edit by hand.

/// Two-sided confidence levels with tabulated quantiles.
pub const LEVELS: [f64; 6] = [0.8, 0.9, 0.95, 0.98, 0.99, 0.999];

/// Largest tabulated degrees of freedom.
pub const MAX_DF: usize = 200;

/// Standard normal quantiles `z_{(1+level)/2}`, one per level.
pub const NORMAL: [f64; 6] = [1.2815515655446004, 1.6448536269514722, 1.959963984540054, 2.3263478740408408, 2.5758293035489004, 3.2905267314919255];

/// `T[level][df - 1]` is the Student-t quantile `t_{(1+level)/2, df}`.
#[rustfmt::skip]
pub const T: [[f64; MAX_DF]; 6] = [
    [
        3.0776835372078066, 1.8856180831641507, 1.6377443536962095, 1.5332062740589432, 1.4758840488558216, 1.4397557472577693,
        1.4149239276488585, 1.396815309743419, 1.3830287383964925, 1.3721836411102863, 1.3634303180205214, 1.3562173340231976,
        1.3501712887800512, 1.345030374454649, 1.3406056078504547, 1.3367571673273142, 1.3333793897216268, 1.330390943569909,
        1.3277282090267986, 1.3253407069850462, 1.3231878738651723, 1.3212367416133617, 1.3194602398161623, 1.3178359336731498,
        1.3163450726738704, 1.314971864270517, 1.3137029128292739, 1.3125267815926667, 1.311433647301551, 1.310415025391396,
        1.3094635494946458, 1.308572793129519, 1.3077371244508866, 1.30695158712643, 1.3062118020160347, 1.3055138855362494,
        1.3048543814976246, 1.3042302038905025, 1.3036385886212742, 1.303077052607195, 1.3025433589533828, 1.3020354871825166,
        1.3015516076821692, 1.3010900596888004, 1.3006493322502375, 1.3002280477069408, 1.2998249473116632, 1.2994388786713915,
        1.2990687847477502, 1.29871369419481, 1.2983727128483713, 1.298045016209747, 1.2977298427910684, 1.297426488209068,
        1.2971342999309394, 1.296852672589802, 1.2965810437952523, 1.296318890395562, 1.2960657251086003, 1.2958210934981313,
        1.2955845713186447, 1.2953557618005966, 1.2951342938198185, 1.2949198196299359, 1.294712013110069, 1.294510568091959,
        1.2943151968755655, 1.2941256287539777, 1.2939416091512694, 1.2937628978978981, 1.2935892685742094, 1.2934205074564602,
        1.2932564126392805, 1.2930967932299262, 1.2929414686075658, 1.292790267741556, 1.2926430285632982, 1.2924995973868265,
        1.2923598283737732, 1.2922235830387954, 1.2920907297919393, 1.2919611435147604, 1.2918347051673338, 1.2917113014235573,
        1.291590824332398, 1.2914731710029606, 1.2913582433114363, 1.2912459476281868, 1.2911361945633675, 1.291028898729628,
        1.2909239785205802, 1.2908213559038177, 1.2907209562273794, 1.2906227080386619, 1.2905265429148436, 1.2904323953039838,
        1.2903402023760184, 1.2902499038829387, 1.2901614420275025, 1.2900747613398769, 1.2899898085616526, 1.2899065325367336,
        1.2898248841086153, 1.2897448160236327, 1.2896662828397722, 1.2895892408406746, 1.289513647954491, 1.28943946367728,
        1.2893666490006377, 1.289295166343309, 1.2892249794865118, 1.2891560535127475, 1.2890883547478822, 1.2890218507062907,
        1.2889565100388838, 1.2888923024838332, 1.2888291988198437, 1.2887671708218107, 1.2887061912187294, 1.2886462336537166,
        1.2885872726460283, 1.2885292835549562, 1.2884722425454924, 1.2884161265556657, 1.2883609132654557, 1.2883065810671916,
        1.2882531090373615, 1.288200476909743, 1.2881486650498, 1.2880976544302576, 1.2880474266078061, 1.287997963700871,
        1.287949248368385, 1.287901263789522, 1.2878539936443323, 1.2878074220952358, 1.2877615337693327, 1.2877163137414844,
        1.2876717475181299, 1.2876278210217977, 1.2875845205762821, 1.2875418328924448, 1.28749974505462, 1.2874582445075848,
        1.2874173190440734, 1.2873769567928055, 1.287337146207006, 1.2872978760533922, 1.2872591354016072, 1.2872209136140764,
        1.2871832003362698, 1.287145985487351, 1.2871092592511924, 1.287073012067744, 1.2870372346247374, 1.2870019178497085,
        1.2869670529023305, 1.2869326311670333, 1.2868986442459076, 1.2868650839518745, 1.2868319423021106, 1.2867992115117173,
        1.2867668839876238, 1.286734952322717, 1.286703409290181, 1.2866722478380457, 1.286641461083931, 1.2866110423099788,
        1.286580984957966, 1.2865512826245922, 1.2865219290569296, 1.2864929181480367, 1.2864642439327219, 1.2864359005834545,
        1.286407882406416, 1.2863801838376883, 1.2863527994395683, 1.2863257238970112, 1.2862989520141905, 1.2862724787111728,
        1.2862462990207069, 1.2862204080851154, 1.2861948011532887, 1.2861694735777809, 1.2861444208119972, 1.2861196384074713,
        1.2860951220112349, 1.2860708673632664, 1.286046870294025, 1.2860231267220603, 1.2859996326516985, 1.2859763841708003,
        1.28595337744859, 1.2859306087335511, 1.2859080743513862, 1.2858857707030416, 1.2858636942627895, 1.2858418415763724,
        1.285820209259198, 1.2857987939945954,
    ],
    [
        6.313751514800932, 2.919985580355516, 2.3533634348018264, 2.131846786326649, 2.0150483733330233, 1.9431802805153022,
        1.894578605061305, 1.8595480375228424, 1.8331129326536335, 1.8124611228107335, 1.7958848187036691, 1.782287555649159,
        1.7709333959867988, 1.7613101357748562, 1.7530503556925547, 1.74588367627624, 1.7396067260750672, 1.7340636066175354,
        1.729132811521367, 1.7247182429207857, 1.7207429028118775, 1.717144374380242, 1.7138715277470473, 1.7108820799094275,
        1.7081407612518986, 1.7056179197592727, 1.7032884457221265, 1.701130934265931, 1.6991270265334972, 1.6972608865939574,
        1.695518782545865, 1.6938887483837104, 1.6923603090303438, 1.6909242551868549, 1.6895724577802655, 1.688297714116816,
        1.6870936195962631, 1.685954460166737, 1.6848751217112248, 1.6838510133356523, 1.6828780021327079, 1.6819523574675337,
        1.681070703202519, 1.6802299765721167, 1.6794273926523546, 1.6786604135568652, 1.6779267216418605, 1.6772241961243388,
        1.6765508926168537, 1.6759050251630974, 1.6752849504249099, 1.6746891537260251, 1.6741162367031004, 1.673564906352161,
        1.6730339652899113, 1.6725223030755778, 1.6720288884609527, 1.671552762454859, 1.6710930321038946, 1.6706488649046363,
        1.6702194837737372, 1.6698041625120112, 1.6694022217068125, 1.6690130250240898, 1.6686359758475522, 1.6682705142276324,
        1.6679161141074244, 1.6675722807967082, 1.6672385486685533, 1.6669144790559562, 1.6665996583285334, 1.666293696131535,
        1.6659962237714314, 1.6657068927340233, 1.6654253734015287, 1.6651513534785958, 1.6648845373274253, 1.6646246445715054,
        1.6643714091975021, 1.6641245785296965, 1.6638839128662524, 1.6636491839760918, 1.663420174869025, 1.6631966790019561,
        1.6629784996576567, 1.6627654493673436, 1.6625573493735006, 1.6623540291297123, 1.662155325834565, 1.6619610839969403,
        1.6617711550302645, 1.6615853968734788, 1.661403673636714, 1.6612258552697985, 1.6610518172519086, 1.6608814403008005,
        1.6607146101002037, 1.6605512170440568, 1.6603911559963895, 1.66023432606575, 1.6600806303931508, 1.6599299759526005,
        1.6597822733633634, 1.6596374367131441, 1.659495383391465, 1.6593560339325577, 1.6592193118671417, 1.6590851435825054,
        1.6589534581903567, 1.6588241874019427, 1.6586972654099734, 1.658572628776925, 1.658450216329324, 1.6583299690576365,
        1.6582118300214266, 1.6580957442594573, 1.6579816587044385, 1.6578695221021444, 1.657759284934641, 1.6576508993473795,
        1.6575443190799364, 1.6574394994001826, 1.657336397041689, 1.657234970144182, 1.6571351781968835, 1.6570369819845607,
        1.656940343536151, 1.6568452260758075, 1.6567515939762396, 1.6566594127142227, 1.65656864882816, 1.656479269877586,
        1.6563912444045108, 1.6563045418965052, 1.6562191327514415, 1.6561349882437961, 1.6560520804924395, 1.6559703824298393,
        1.6558898677725957, 1.6558105109932526, 1.6557322872933131, 1.6556551725774071, 1.6555791434285434, 1.6555041770844041,
        1.6554302514146266, 1.655357344899022, 1.6552854366066903, 1.6552145061759864, 1.6551445337952997, 1.6550755001846063,
        1.655007386577756, 1.654940174705469, 1.6548738467789963, 1.654808385474426, 1.6547437739175987, 1.6546799956696048,
        1.6546170347128435, 1.6545548754376096, 1.6544935026291934, 1.6544329014554642, 1.6543730574549205, 1.6543139565251865,
        1.6542555849119323, 1.6541979291982014, 1.6541409762941324, 1.6540847134270493, 1.6540291281319128, 1.6539742082421154,
        1.6539199418806, 1.6538663174513006, 1.6538133236308796, 1.6537609493607581, 1.653709183839421, 1.653658016514993,
        1.653607437078066, 1.6535574354547764, 1.6535080018001138, 1.653459126491462, 1.653410800122353, 1.6533630134964312,
        1.6533157576216215, 1.6532690237044858, 1.653222803144771, 1.6531770875301313, 1.653131868631024, 1.6530871383957708,
        1.6530428889457807, 1.6529991125709202, 1.6529558017250379, 1.6529129490216263, 1.652870547229623, 1.6528285892693433,
        1.6527870682085384, 1.6527459772585793, 1.6527053097707547, 1.6526650592326855, 1.6526252192648494, 1.6525857836172075,
        1.652546746165939, 1.652508100910269,
    ],
    [
        12.706204736432095, 4.302652729696142, 3.182446305284263, 2.7764451051977987, 2.570581835636314, 2.4469118511449692,
        2.3646242515927844, 2.306004135204166, 2.2621571628540993, 2.2281388519649385, 2.200985160082949, 2.1788128296634177,
        2.1603686564610127, 2.1447866879169273, 2.131449545559323, 2.1199052992210112, 2.1098155778331806, 2.10092204024096,
        2.093024054408263, 2.0859634472658364, 2.079613844727662, 2.0738730679040147, 2.0686576104190406, 2.0638985616280205,
        2.059538552753294, 2.055529438642871, 2.0518305164802833, 2.048407141795244, 2.045229642132703, 2.0422724563012373,
        2.0395134463964077, 2.036933343460101, 2.0345152974493383, 2.032244509317718, 2.0301079282503425, 2.0280940009804502,
        2.0261924630291093, 2.024394163911969, 2.0226909200367604, 2.0210753903062733, 2.019540970441376, 2.018081702818444,
        2.016692199227824, 2.0153675744437636, 2.014103388880846, 2.0128955989194286, 2.0117405137297655, 2.010634757624232,
        2.0095752371292397, 2.008559112100761, 2.007583770315836, 2.006646805061688, 2.0057459953178687, 2.004879288188057,
        2.004044783289146, 2.003240718847872, 2.002465459291007, 2.0017174841452356, 2.0009953780882674, 2.00029782201426,
        1.9996235849949393, 1.9989715170333786, 1.998340542520741, 1.9977296543176926, 1.9971379083920033, 1.9965644189523113,
        1.9960083540252962, 1.9954689314298435, 1.9949454151072374, 1.994437111771186, 1.993943367845625, 1.9934635666618716,
        1.992997125889855, 1.9925434951809322, 1.9921021540022417, 1.9916726096446642, 1.9912543953883843, 1.9908470688116904,
        1.9904502102301282, 1.9900634212544457, 1.9896863234569024, 1.9893185571365721, 1.9889597801751624, 1.9886096669757087,
        1.9882679074772216, 1.9879342062390202, 1.9876082815890703, 1.987289864831169, 1.986978699506281, 1.9866745407037676,
        1.9863771544186173, 1.98608631695113, 1.9858018143458234, 1.985523441866604, 1.9852510035091888, 1.9849843115310182,
        1.9847231860271193, 1.984467454426692, 1.9842169515086827, 1.9839715184496334, 1.983731002885281, 1.98349525849594,
        1.98326414470971, 1.9830375264229898, 1.9828152737371543, 1.9825972617102907, 1.9823833701230174, 1.9821734832574511,
        1.981967489688474, 1.98176528208651, 1.9815667570310707, 1.9813718148344004, 1.98118035937458, 1.9809922979375063,
        1.9808075410672, 1.9806260024239375, 1.9804475986497292, 1.9802722492407059, 1.980099876426006, 1.9799304050527766,
        1.9797637624769302, 1.979599878459331, 1.9794386850670895, 1.9792801165796825, 1.979124109399617, 1.9789706019673934,
        1.9788195346805206, 1.978670849816362, 1.978524491458605, 1.9783804054271528, 1.9782385392112583, 1.9780988419057233,
        1.9779612641500013, 1.9778257580700527, 1.977692277222804, 1.9775607765430832, 1.9774312122928936, 1.9773035420129161,
        1.977177724476122, 1.9770537196433882, 1.9769314886210219, 1.9768109936200895, 1.976692197917468, 1.9765750658185364,
        1.9764595626214159, 1.9763456545827003, 1.9762333088845878, 1.9761224936033632, 1.976013177679155, 1.9759053308869137,
        1.9757989238085503, 1.9756939278061865, 1.9755903149964584, 1.9754880582258318, 1.9753871310468782, 1.9752875076954723,
        1.975189163068866, 1.975092072704601, 1.9749962127602252, 1.9749015599937718, 1.974808091744976, 1.9747157859171878,
        1.9746246209599578, 1.9745345758522654, 1.9744456300863589, 1.9743577636521854, 1.9742709570223844, 1.9741851911378205,
        1.9741004473936334, 1.9740167076257822, 1.9739339540980687, 1.9738521694896134, 1.973771336882769, 1.9736914397514558,
        1.9736124619498971, 1.973534387701743, 1.9734572015895642, 1.9733808885447028, 1.9733054338374663, 1.9732308230676485,
        1.9731570421553688, 1.9730840773322158, 1.973011915132679, 1.9729405423858688, 1.9728699462074988, 1.9728001139921347,
        1.9727310334056902, 1.9726626923781652, 1.9725950790966154, 1.9725281819983447, 1.9724619897643145, 1.9723964913127592,
        1.9723316757930007, 1.972267532579456, 1.9722040512658325, 1.9721412216594967, 1.9720790337760217, 1.9720174778338955,
        1.971956544249395, 1.9718962236316089,
    ],
    [
        31.82051595375758, 6.964556734283269, 4.540702858471383, 3.7469473879811366, 3.3649299989072747, 3.142668403290985,
        2.9979515668685277, 2.8964594477096215, 2.821437925025808, 2.7637694581126953, 2.7180791838138614, 2.680997993130055,
        2.6503088378527013, 2.624494067560231, 2.602480294995493, 2.583487185267472, 2.5669339837199097, 2.552379630179453,
        2.539483190622288, 2.527977002740546, 2.517648016044097, 2.508324552898667, 2.4998667394943976, 2.4921594731575762,
        2.4851071754106413, 2.478629823591159, 2.4726599119559487, 2.4671400979674316, 2.4620213601503833, 2.4572615424005697,
        2.45282419340263, 2.44867763367204, 2.4447941998077973, 2.4411496279064764, 2.437722547143737, 2.4344940612311357,
        2.431447400464671, 2.428567630859085, 2.4258414097356287, 2.4232567793348565, 2.420802991729078, 2.418470359634635,
        2.4162501287629707, 2.4141343681687375, 2.412115875703358, 2.410188096201379, 2.408345050443425, 2.4065812732756067,
        2.404891759537668, 2.4032719166741714, 2.4017175230846965, 2.400224691418382, 2.3987898361414386, 2.397409644808455,
        2.396081052553316, 2.394801219386567, 2.393567509945554, 2.39237747539368, 2.3912288372073562, 2.3901194726249124,
        2.3890474015620953, 2.3880107748245534, 2.3870078634697967, 2.3860370491899454, 2.385096815602821, 2.384185740352837,
        2.383302487935197, 2.3824458031673093, 2.3816145052403037, 2.3808074822914325, 2.380023686444878, 2.379262129274508,
        2.378521877647267, 2.377802049910469, 2.3771018123902574, 2.3764203761719984, 2.3757569941364802, 2.375110958228517,
        2.374481596936969, 2.3738682729673424, 2.3732703810900015, 2.3726873461487403, 2.3721186212159378, 2.3715636858818603,
        2.371022044666872, 2.370493225546369, 2.369976778579222, 2.3694722746313324, 2.368979304186714, 2.368497476239167,
        2.368026417258248, 2.3675657702237847, 2.3671151937236976, 2.366674361110337, 2.366242959710951, 2.365820690088284,
        2.3654072653476232, 2.3650024104869263, 2.364605861786943, 2.3642173662384813, 2.363836681004212, 2.3634635729125977,
        2.363097817981741, 2.362739200971102, 2.3623875149592015, 2.362042560945574, 2.3617041474753524, 2.3613720902850037,
        2.361046211967844, 2.3607263416580384, 2.360412314731927, 2.360103972525561, 2.359801162067439, 2.359503735825506,
        2.359211551467511, 2.3589244716339386, 2.358642363722726, 2.358365099685072, 2.358092555831669, 2.3578246126487548,
        2.357561154623388, 2.3573020700774325, 2.35704725100974, 2.3567965929502086, 2.356549994804849, 2.3563073587311645,
        2.3560685900059597, 2.3558335969015283, 2.3556022905681715, 2.355374584922207, 2.355150396539167, 2.354929644551907,
        2.3547122505533573, 2.3544981385036925, 2.3542872345239414, 2.3540794672821512, 2.3538747672061042, 2.3536730668768104,
        2.3534743008367536, 2.3532784055190814, 2.3530853191798298, 2.3528949818330473, 2.352707335188674, 2.352522322593026,
        2.352339888971779, 2.352159980775313, 2.3519825459263144, 2.3518075337695206, 2.3516348950235146, 2.3514645817344593,
        2.3512965472316973, 2.3511307460851154, 2.350967134064199, 2.350805668098699, 2.3506463062408334, 2.3504890076289615,
        2.3503337324526523, 2.3501804419191017, 2.350029098220821, 2.349879664504553, 2.3497321048413577, 2.3495863841978104,
        2.34944246840828, 2.349300324148223, 2.3491599189084584, 2.349021220970386, 2.348884199382097, 2.3487488239353502,
        2.3486150651433686, 2.348482894219433, 2.348352283056224, 2.348223204205904, 2.3480956308608825, 2.347969536835258,
        2.3478448965469014, 2.3477216850001565, 2.3475998777691243, 2.3474794509815258, 2.347360381303106, 2.347242645922557,
        2.3471262225369562, 2.3470110893376788, 2.3468972249967788, 2.3467846086538224, 2.346673219903144, 2.346563038781524,
        2.3464540457562584, 2.3463462217136204, 2.3462395479476843, 2.346134006149505, 2.3460295783966485, 2.3459262471430415,
        2.3458239952091455, 2.345722805772436, 2.345622662358177, 2.345523548830477, 2.3454254493836264, 2.345328348533689,
        2.3452322311103635, 2.345137082249075,
    ],
    [
        63.65674116287399, 9.92484320091807, 5.840909309733352, 4.604094871415897, 4.032142983557536, 3.707428021324907,
        3.4994832973505026, 3.3553873313333957, 3.2498355415921254, 3.16927267261695, 3.1058065155392804, 3.0545395893929017,
        3.0122758387165773, 2.976842734370834, 2.9467128834859504, 2.920781622496036, 2.8982305196347173, 2.878440472713585,
        2.860934606449914, 2.845339709776814, 2.831359558017186, 2.818756060596369, 2.8073356837675227, 2.796939504772804,
        2.787435813675851, 2.7787145333289134, 2.7706829571216756, 2.763262455461066, 2.756385903670335, 2.7499956535670305,
        2.7440419192941268, 2.738481482012083, 2.733276642350758, 2.7283943670706616, 2.723805589208047, 2.719484630449974,
        2.715408721549962, 2.7115576019130625, 2.707913183517646, 2.7044592674331502, 2.701181303578512, 2.6980661862199766,
        2.695102079157669, 2.692278265693017, 2.6895850193746385, 2.6870134922422126, 2.6845556178665215, 2.6822040269502136,
        2.67995197363155, 2.6777932709408425, 2.6757222341106464, 2.6737336306472184, 2.6718226362410027, 2.669984795734891,
        2.668215988486193, 2.6665123975560627, 2.664870482241971, 2.663286953537658, 2.661758752162967, 2.6602830288550363,
        2.658857126653926, 2.657478564951156, 2.656145025099861, 2.6548543374110842, 2.6536044693829246, 2.652393515028316,
        2.651219685183657, 2.650081298694729, 2.6489767743886263, 2.6479046237511508, 2.6468634442383916, 2.645851913159326,
        2.644868782073382, 2.6439128716530895, 2.642983066967393, 2.6420783131459915, 2.6411976113892717, 2.6403400152921264,
        2.63950462745322, 2.6386905963441825, 2.637897113415776, 2.637123410420374, 2.6363687569321224, 2.6356324580479606,
        2.6349138522543054, 2.634212309445634, 2.633527229082496, 2.6328580384776448, 2.6322041912000085, 2.631565165587158,
        2.630940463357764, 2.630329608316288, 2.6297321451428344, 2.6291476382617045, 2.628575670782743, 2.6280158435100693,
        2.627467774013252, 2.626931095756373, 2.6264054572808275, 2.6258905214380177, 2.625385964668441, 2.624891476323912,
        2.6244067580299553, 2.623931523085605, 2.6234654958980834, 2.6230084114500203, 2.6225600147970334, 2.622120060593689,
        2.6216883126459782, 2.621264543488595, 2.6208485339854377, 2.620440072951842, 2.6200389567971962, 2.6196449891866536,
        2.6192579807207705, 2.618877748631969, 2.6185041164968004, 2.618136913963057, 2.617775976490859, 2.617421145106866,
        2.617072266170864, 2.616729191153998, 2.616391776427972, 2.6160598830646076, 2.615733376645151, 2.615412127078789,
        2.6150960084298664, 2.61478489875331, 2.61447867993781, 2.6141772375563477, 2.6138804607236517, 2.613588241960226,
        2.613300477062599, 2.6130170649794473, 2.612737907693308, 2.6124629101075767, 2.612191979938513, 2.6119250276120067,
        2.611661966164858, 2.6114027111503395, 2.6111471805478264, 2.6108952946763013, 2.610646976111522, 2.61040214960669,
        2.610160742016442, 2.6099226822264048, 2.609687901078037, 2.6094563313030243, 2.609227907462654, 2.6090025658841007,
        2.6087802446012596, 2.608560883297947, 2.608344423253348, 2.6081308072896223, 2.6079199797215513, 2.6077118863081523,
        2.607506474206159, 2.607303691925294, 2.6071034892852336, 2.6069058173742237, 2.606710628509242, 2.6065178761976546,
        2.6063275151003027, 2.60613950099595, 2.6059537906167436, 2.605770342136419, 2.605589114356694, 2.605410067197838,
        2.6052331615388185, 2.6050583591888095, 2.6048856228597033, 2.604714916139602, 2.604546203467224, 2.604379450107217,
        2.604214622126315, 2.60405168637032, 2.603890610441874, 2.603731362678984, 2.603573912134276, 2.6034182285549488,
        2.6032642823633956, 2.6031120446384715, 2.6029614870973843, 2.602812582078179, 2.602665302522795, 2.6025196219606745,
        2.6023755144929086, 2.602232954776884, 2.6020919180114306, 2.601952379922437, 2.6018143167489227, 2.6016777052295534,
        2.601542522589576, 2.6014087465281603, 2.6012763552061373, 2.601145327234116, 2.6010156416609598, 2.6008872779626224,
        2.600760216031323, 2.600634436165038,
    ],
    [
        636.6192487687896, 31.599054577041514, 12.923978636637424, 8.610301581379899, 6.868826625881279, 5.958816178818885,
        5.407882520977668, 5.0413054333884535, 4.7809125859335495, 4.586893858703131, 4.436979338234604, 4.317791283606267,
        4.220831727707185, 4.14045411273826, 4.0727651959038464, 4.014996327184108, 3.965126272119082, 3.9216458250852084,
        3.883405852592132, 3.8495162749308744, 3.819277164274508, 3.7921306716984358, 3.7676268043118255, 3.745398619290096,
        3.7251439497286927, 3.7066117434942614, 3.6895917135228924, 3.673906400615373, 3.6594050194045704, 3.6459586349971502,
        3.633456349725412, 3.621802259843122, 3.610913007636226, 3.600715797372705, 3.591146775800383, 3.5821497014483947,
        3.5736748444390978, 3.565678071575506, 3.5581200813290517, 3.5509657608604304, 3.5441836429693163, 3.537745445325638,
        3.531625677806629, 3.525801306486043, 3.5202514649701926, 3.514957205481079, 3.5099012834488947, 3.505067970469734,
        3.5004428913669883, 3.496012881810834, 3.4917658635336575, 3.487690734656992, 3.4837772730382897, 3.4800160508701508,
        3.47639835903349, 3.472916139929829, 3.469561927704722, 3.466328794930966, 3.4632103049519083, 3.460200469196333,
        3.457293708870397, 3.4544848205120138, 3.4517689449609965, 3.449141539356377, 3.4465983518219794, 3.4441353985440206,
        3.4417489429812127, 3.4394354769795177, 3.437191703591108, 3.435014521420837, 3.432901010344123, 3.43084841845815,
        3.428854150143916, 3.4269157551303864, 3.425030918463982, 3.423197451297196, 3.4214132824193353, 3.419676450460605,
        3.4179850967078886, 3.4163374584769763, 3.4147318629916126, 3.413166721724719, 3.4116405251616024, 3.4101518379488933,
        3.4086992943964654, 3.407281594302757, 3.4058974990766697, 3.4045458281317775, 3.4032254555307904, 3.401935306860242,
        3.400674356317196, 3.39944162399137, 3.3982361733275583, 3.397057108754568, 3.3959035734680385, 3.3947747473556342,
        3.3936698450540588, 3.392588114128221, 3.391528833363684, 3.390491311164263, 3.3894748840473055, 3.3884789152297583,
        3.387502793298714, 3.386545930960592, 3.3856077638635975, 3.3846877494884806, 3.3837853661030373, 3.3829001117761077,
        3.3820315034471555, 3.381179076047832, 3.3803423816721296, 3.3795209887920605, 3.378714481515932, 3.3779224588865793,
        3.3771445342170496, 3.3763803344614205, 3.375629499618624, 3.374891682167254, 3.3741665465295116, 3.3734537685625328,
        3.3727530350755024, 3.372064043371018, 3.371386500809317, 3.370720124394037, 3.370064640378275, 3.369419783889806,
        3.368785298574371, 3.3681609362560354, 3.3675464566136655, 3.36694162687264, 3.3663462215109767, 3.3657600219790664,
        3.365182816432319, 3.3646143994760087, 3.364054571921683, 3.363503140554529, 3.362959917911124, 3.3624247220670305,
        3.3618973764337454, 3.361377709564503, 3.360865554968506, 3.3603607509331455, 3.3598631403538297, 3.359372570571014,
        3.3588888932141234, 3.35841196405198, 3.3579416428494646, 3.357477793230087, 3.35702028254418, 3.3565689817424755,
        3.3561237652547806, 3.355684510873528, 3.3552510996419733, 3.3548234157468277, 3.3544013464151092, 3.3539847818150346,
        3.353573614960762, 3.35316774162081, 3.3527670602299935, 3.3523714718047115, 3.3519808798614505, 3.3515951903383456,
        3.3512143115196933, 3.350838153963248, 3.3504666304302266, 3.350099655817867, 3.349737147094457, 3.3493790232367195,
        3.3490252051694527, 3.348675615707335, 3.3483301794988045, 3.3479888229719257, 3.347651474282164, 3.347318063261985,
        3.346988521372211, 3.3466627816550614, 3.3463407786888038, 3.3460224485439665, 3.345707728741029, 3.345396558209548,
        3.3450888772486658, 3.344784627488927, 3.3444837518553716, 3.3441861945318507, 3.343891900926516, 3.3436008176384306,
        3.343312892425276, 3.3430280741721012, 3.3427463128610775, 3.342467559542215, 3.3421917663050285, 3.341918886251084,
        3.3416488734674172, 3.3413816830007907, 3.341117270832742, 3.3408555938554185, 3.3405966098481494, 3.340340277454741,
        3.3400865561614625, 3.3398354062757107,
    ],
];
